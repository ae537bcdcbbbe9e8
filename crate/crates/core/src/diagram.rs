//! A small typed term language for morphisms of a strict monoidal category,
//! evaluated to matrices.
//!
//! Grammar (`*` binds tighter than `;`, both left-associative):
//!
//! ```text
//! term  := tens (';' tens)*
//! tens  := atom ('*' atom)*
//! atom  := IDENT | 'id' '(' word ')' | 'braid' '(' word ',' word ')'
//!        | 'braid_inv' '(' word ',' word ')' | '(' term ')'
//! word  := IDENT*            -- the empty word is the tensor unit
//! ```
//!
//! `f ; g` means "first `f`, then `g`".

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exactla::{braid, braid_inv, kron, Mat};
use crate::verdict::mismatch;

/// A word of object identifiers; concatenation is the tensor, the empty word
/// is the unit ⊤.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ObjWord(pub Vec<String>);

impl ObjWord {
    pub fn unit() -> Self {
        ObjWord(Vec::new())
    }

    pub fn of(names: &[&str]) -> Self {
        ObjWord(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn concat(&self, other: &ObjWord) -> ObjWord {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        ObjWord(v)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for ObjWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "⊤")
        } else {
            write!(f, "{}", self.0.join(" "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorTerm {
    Gen(String),
    Id(ObjWord),
    /// `Compose(g, f)` is `g ∘ f`, written `f ; g`.
    Compose(Box<MorTerm>, Box<MorTerm>),
    Tensor(Box<MorTerm>, Box<MorTerm>),
    Braid(ObjWord, ObjWord),
    BraidInv(ObjWord, ObjWord),
}

impl MorTerm {
    pub fn gen(name: &str) -> Self {
        MorTerm::Gen(name.to_string())
    }

    /// `self ; next`
    pub fn then(self, next: MorTerm) -> Self {
        MorTerm::Compose(Box::new(next), Box::new(self))
    }

    pub fn tensor(self, other: MorTerm) -> Self {
        MorTerm::Tensor(Box::new(self), Box::new(other))
    }
}

impl fmt::Display for MorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorTerm::Gen(n) => write!(f, "{n}"),
            MorTerm::Id(w) => write!(f, "id({})", w.0.join(" ")),
            MorTerm::Braid(a, b) => write!(f, "braid({}, {})", a.0.join(" "), b.0.join(" ")),
            MorTerm::BraidInv(a, b) => write!(f, "braid_inv({}, {})", a.0.join(" "), b.0.join(" ")),
            MorTerm::Compose(g, first) => {
                write!(f, "{first} ; ")?;
                if matches!(**g, MorTerm::Compose(..)) {
                    write!(f, "({g})")
                } else {
                    write!(f, "{g}")
                }
            }
            MorTerm::Tensor(a, b) => {
                if matches!(**a, MorTerm::Compose(..)) {
                    write!(f, "({a})")?;
                } else {
                    write!(f, "{a}")?;
                }
                write!(f, " * ")?;
                if matches!(**b, MorTerm::Compose(..) | MorTerm::Tensor(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("type mismatch: {expected} vs {found}")]
    TypeMismatch { expected: ObjWord, found: ObjWord },
    #[error("unbound generator {0:?}")]
    UnboundGenerator(String),
    #[error("unknown object {0:?}")]
    UnknownObject(String),
    #[error("boundary mismatch: ({0}) -> ({1}) vs ({2}) -> ({3})")]
    BoundaryMismatch(ObjWord, ObjWord, ObjWord, ObjWord),
    #[error("generator {name:?} has a {rows}x{cols} matrix but its boundary needs {want_rows}x{want_cols}")]
    GeneratorShape { name: String, rows: usize, cols: usize, want_rows: usize, want_cols: usize },
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub dom: ObjWord,
    pub cod: ObjWord,
    pub mat: Mat,
}

/// Object dimensions and generator bindings.
#[derive(Debug, Clone, Default)]
pub struct GenEnv {
    objects: BTreeMap<String, usize>,
    generators: BTreeMap<String, Generator>,
}

impl GenEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(mut self, name: &str, dim: usize) -> Self {
        self.objects.insert(name.to_string(), dim);
        self
    }

    /// Binds a generator; the matrix shape must match the boundary dimensions.
    pub fn bind(&mut self, name: &str, dom: ObjWord, cod: ObjWord, mat: Mat) -> Result<(), DiagramError> {
        let want_cols = self.word_dim(&dom)?;
        let want_rows = self.word_dim(&cod)?;
        if mat.shape() != (want_rows, want_cols) {
            return Err(DiagramError::GeneratorShape {
                name: name.to_string(),
                rows: mat.rows(),
                cols: mat.cols(),
                want_rows,
                want_cols,
            });
        }
        self.generators.insert(name.to_string(), Generator { dom, cod, mat });
        Ok(())
    }

    pub fn with(mut self, name: &str, dom: &[&str], cod: &[&str], mat: Mat) -> Result<Self, DiagramError> {
        self.bind(name, ObjWord::of(dom), ObjWord::of(cod), mat)?;
        Ok(self)
    }

    pub fn word_dim(&self, w: &ObjWord) -> Result<usize, DiagramError> {
        w.0.iter().try_fold(1usize, |acc, o| {
            self.objects
                .get(o)
                .map(|d| acc * d)
                .ok_or_else(|| DiagramError::UnknownObject(o.clone()))
        })
    }

    pub fn generator(&self, name: &str) -> Option<&Generator> {
        self.generators.get(name)
    }

    pub fn objects(&self) -> impl Iterator<Item = (&String, &usize)> {
        self.objects.iter()
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, offset: usize, message: impl Into<String>) -> Result<T, DiagramError> {
        Err(DiagramError::Syntax { offset, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), DiagramError> {
        if self.eat(c) {
            Ok(())
        } else {
            let at = self.pos;
            self.err(at, format!("expected {c:?}"))
        }
    }

    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let mut end = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 { c.is_alphabetic() || c == '_' } else { c.is_alphanumeric() || c == '_' || c == '\'' };
            if !ok {
                break;
            }
            end = i + c.len_utf8();
        }
        if end == 0 {
            return None;
        }
        self.pos += end;
        Some(rest[..end].to_string())
    }

    fn word(&mut self) -> ObjWord {
        let mut w = Vec::new();
        while let Some(id) = self.ident() {
            w.push(id);
        }
        ObjWord(w)
    }

    fn term(&mut self) -> Result<MorTerm, DiagramError> {
        let mut t = self.tens()?;
        while self.eat(';') {
            let next = self.tens()?;
            t = t.then(next);
        }
        Ok(t)
    }

    fn tens(&mut self) -> Result<MorTerm, DiagramError> {
        let mut t = self.atom()?;
        while self.eat('*') {
            let next = self.atom()?;
            t = t.tensor(next);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<MorTerm, DiagramError> {
        self.skip_ws();
        let start = self.pos;
        if self.eat('(') {
            let t = self.term()?;
            self.expect(')')?;
            return Ok(t);
        }
        let Some(name) = self.ident() else {
            return match self.peek() {
                None => self.err(start, "unexpected end of input, expected a term"),
                Some(c) => self.err(start, format!("unexpected {c:?}, expected a term")),
            };
        };
        match name.as_str() {
            "id" if self.peek() == Some('(') => {
                self.expect('(')?;
                let w = self.word();
                self.expect(')')?;
                Ok(MorTerm::Id(w))
            }
            "braid" | "braid_inv" if self.peek() == Some('(') => {
                self.expect('(')?;
                let a = self.word();
                self.expect(',')?;
                let b = self.word();
                self.expect(')')?;
                Ok(if name == "braid" { MorTerm::Braid(a, b) } else { MorTerm::BraidInv(a, b) })
            }
            _ => Ok(MorTerm::Gen(name)),
        }
    }
}

pub fn parse_term(src: &str) -> Result<MorTerm, DiagramError> {
    let mut p = Parser { src, pos: 0 };
    let t = p.term()?;
    match p.peek() {
        None => Ok(t),
        Some(c) => {
            let at = p.pos;
            p.err(at, format!("unexpected {c:?} after term"))
        }
    }
}

/// Parses `"lhs = rhs"`.
pub fn parse_equation(src: &str) -> Result<(MorTerm, MorTerm), DiagramError> {
    let Some(eq) = src.find('=') else {
        return Err(DiagramError::Syntax { offset: src.len(), message: "expected '='".into() });
    };
    let lhs = parse_term(&src[..eq])?;
    let rhs = parse_term(&src[eq + 1..]).map_err(|e| match e {
        DiagramError::Syntax { offset, message } => DiagramError::Syntax { offset: offset + eq + 1, message },
        other => other,
    })?;
    Ok((lhs, rhs))
}

pub fn typecheck(t: &MorTerm, env: &GenEnv) -> Result<(ObjWord, ObjWord), DiagramError> {
    match t {
        MorTerm::Gen(n) => env
            .generator(n)
            .map(|g| (g.dom.clone(), g.cod.clone()))
            .ok_or_else(|| DiagramError::UnboundGenerator(n.clone())),
        MorTerm::Id(w) => {
            env.word_dim(w)?;
            Ok((w.clone(), w.clone()))
        }
        MorTerm::Braid(a, b) | MorTerm::BraidInv(a, b) => {
            env.word_dim(a)?;
            env.word_dim(b)?;
            let (dom, cod) = (a.concat(b), b.concat(a));
            Ok(if matches!(t, MorTerm::Braid(..)) { (dom, cod) } else { (cod, dom) })
        }
        MorTerm::Compose(g, f) => {
            let (fd, fc) = typecheck(f, env)?;
            let (gd, gc) = typecheck(g, env)?;
            if fc != gd {
                return Err(DiagramError::TypeMismatch { expected: gd, found: fc });
            }
            Ok((fd, gc))
        }
        MorTerm::Tensor(a, b) => {
            let (ad, ac) = typecheck(a, env)?;
            let (bd, bc) = typecheck(b, env)?;
            Ok((ad.concat(&bd), ac.concat(&bc)))
        }
    }
}

pub fn evaluate(t: &MorTerm, env: &GenEnv) -> Result<Mat, DiagramError> {
    typecheck(t, env)?;
    eval_checked(t, env)
}

fn eval_checked(t: &MorTerm, env: &GenEnv) -> Result<Mat, DiagramError> {
    Ok(match t {
        MorTerm::Gen(n) => env.generator(n).ok_or_else(|| DiagramError::UnboundGenerator(n.clone()))?.mat.clone(),
        MorTerm::Id(w) => Mat::identity(env.word_dim(w)?),
        MorTerm::Braid(a, b) => braid(env.word_dim(a)?, env.word_dim(b)?),
        // braid_inv(a, b): b a -> a b, the inverse of braid(a, b)
        MorTerm::BraidInv(a, b) => braid_inv(env.word_dim(a)?, env.word_dim(b)?),
        MorTerm::Compose(g, f) => eval_checked(g, env)?.dot(&eval_checked(f, env)?),
        MorTerm::Tensor(a, b) => kron(&eval_checked(a, env)?, &eval_checked(b, env)?),
    })
}

/// Outcome of comparing two terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquationVerdict {
    pub holds: bool,
    /// `(row, col, lhs value, rhs value)` of the first differing entry.
    pub counterexample: Option<String>,
}

pub fn equation_holds(lhs: &MorTerm, rhs: &MorTerm, env: &GenEnv) -> Result<EquationVerdict, DiagramError> {
    let (ld, lc) = typecheck(lhs, env)?;
    let (rd, rc) = typecheck(rhs, env)?;
    if ld != rd || lc != rc {
        return Err(DiagramError::BoundaryMismatch(ld, lc, rd, rc));
    }
    let a = eval_checked(lhs, env)?;
    let b = eval_checked(rhs, env)?;
    let cx = mismatch(&a, &b);
    Ok(EquationVerdict { holds: cx.is_none(), counterexample: cx })
}

/// Parses both sides and checks them in `env`.
pub fn check_equation_text(lhs: &str, rhs: &str, env: &GenEnv) -> Result<EquationVerdict, DiagramError> {
    equation_holds(&parse_term(lhs)?, &parse_term(rhs)?, env)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{eye, int};

    fn z2_env() -> GenEnv {
        // kZ/2 with basis (e, g): mu(x ⊗ y) = xy
        let mu = Mat::from_i64(&[&[1, 0, 0, 1], &[0, 1, 1, 0]]);
        GenEnv::new()
            .object("H", 2)
            .with("mu", &["H", "H"], &["H"], mu)
            .unwrap()
            .with("eta", &[], &["H"], Mat::from_i64(&[&[1], &[0]]))
            .unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_term("mu ; delta").unwrap(), MorTerm::gen("mu").then(MorTerm::gen("delta")));
        assert_eq!(
            parse_term("(id(H) * eta) ; mu").unwrap(),
            MorTerm::Id(ObjWord::of(&["H"])).tensor(MorTerm::gen("eta")).then(MorTerm::gen("mu"))
        );
        match parse_term("mu ;; delta") {
            Err(DiagramError::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_term("mu ; (delta"), Err(DiagramError::Syntax { .. })));
        assert!(matches!(parse_term(""), Err(DiagramError::Syntax { offset: 0, .. })));
    }

    #[test]
    fn star_binds_tighter() {
        let t = parse_term("a * b ; c").unwrap();
        assert_eq!(t, MorTerm::gen("a").tensor(MorTerm::gen("b")).then(MorTerm::gen("c")));
    }

    #[test]
    fn typecheck_examples() {
        let env = z2_env();
        let unit = typecheck(&MorTerm::Id(ObjWord::unit()), &env).unwrap();
        assert_eq!(unit, (ObjWord::unit(), ObjWord::unit()));
        let t = typecheck(&parse_term("mu * mu").unwrap(), &env).unwrap();
        assert_eq!(t, (ObjWord::of(&["H", "H", "H", "H"]), ObjWord::of(&["H", "H"])));
        match typecheck(&parse_term("eta ; eta").unwrap(), &env) {
            Err(DiagramError::TypeMismatch { expected, found }) => {
                assert_eq!(expected, ObjWord::unit());
                assert_eq!(found, ObjWord::of(&["H"]));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            typecheck(&parse_term("nope").unwrap(), &env),
            Err(DiagramError::UnboundGenerator(_))
        ));
    }

    #[test]
    fn evaluate_examples() {
        let env = GenEnv::new().object("H", 3);
        assert_eq!(evaluate(&parse_term("id(H)").unwrap(), &env).unwrap(), eye(3));
        let env = GenEnv::new().object("X", 2).with("f", &["X"], &["X"], Mat::from_i64(&[&[1, 2], &[3, 4]])).unwrap();
        // hand product: (1 2; 3 4)^2 = (7 10; 15 22)
        assert_eq!(evaluate(&parse_term("f ; f").unwrap(), &env).unwrap(), Mat::from_i64(&[&[7, 10], &[15, 22]]));
        let env = GenEnv::new().object("H", 2);
        assert_eq!(evaluate(&parse_term("braid(H, H)").unwrap(), &env).unwrap(), braid(2, 2));
    }

    #[test]
    fn equation_examples() {
        let env = z2_env();
        let v = check_equation_text("mu", "mu", &env).unwrap();
        assert!(v.holds);
        let v = check_equation_text("(mu * id(H)) ; mu", "(id(H) * mu) ; mu", &env).unwrap();
        assert!(v.holds);
        let mut bad = z2_env();
        let mut mu = bad.generator("mu").unwrap().mat.clone();
        mu.set(0, 1, int(1));
        bad.bind("mu", ObjWord::of(&["H", "H"]), ObjWord::of(&["H"]), mu).unwrap();
        let v = check_equation_text("(mu * id(H)) ; mu", "(id(H) * mu) ; mu", &bad).unwrap();
        assert!(!v.holds);
        assert!(v.counterexample.unwrap().starts_with("entry ("));
        assert!(matches!(
            check_equation_text("mu", "eta", &env),
            Err(DiagramError::BoundaryMismatch(..))
        ));
    }

    #[test]
    fn braid_then_inverse_is_identity() {
        let env = GenEnv::new().object("A", 2).object("B", 3);
        for (a, b) in [("A", "B"), ("B", "A"), ("A", "A")] {
            let t = parse_term(&format!("braid({a}, {b}) ; braid_inv({a}, {b})")).unwrap();
            assert!(evaluate(&t, &env).unwrap().is_identity());
        }
    }

    #[test]
    fn print_round_trip_corpus() {
        for src in [
            "mu ; delta",
            "a * b * c",
            "a * (b * c)",
            "a ; (b ; c)",
            "(a ; b) * c ; d",
            "id() * braid(H K, L) ; braid_inv(L, H K)",
            "(eta ; delta) * id(H) ; id(H) * braid(H, H) ; (mu ; eps) * id(H)",
        ] {
            let t = parse_term(src).unwrap();
            let printed = t.to_string();
            assert_eq!(parse_term(&printed).unwrap(), t, "{src} -> {printed}");
        }
    }
}
