//! Finite groups and finite groupoids given by multiplication tables.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    Group(String),
    #[error("invalid groupoid: {0}")]
    Groupoid(String),
}

/// A finite group on `0..order` with a Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    mul: Vec<Vec<usize>>,
    identity: usize,
    inv: Vec<usize>,
}

impl FiniteGroup {
    pub fn new(mul: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = mul.len();
        let bad = |m: String| Err(GroupError::Group(m));
        if n == 0 {
            return bad("empty group".into());
        }
        if mul.iter().any(|row| row.len() != n || row.iter().any(|&x| x >= n)) {
            return bad("table is not a square table over 0..n".into());
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| mul[e][x] == x && mul[x][e] == x)) else {
            return bad("no identity element".into());
        };
        let mut inv = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| mul[a][b] == identity && mul[b][a] == identity) {
                Some(b) => inv.push(b),
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        Ok(FiniteGroup { mul, identity, inv })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Self::new(mul).expect("cyclic table")
    }

    /// The symmetric group on `n` letters; elements are permutations in
    /// lexicographic order and `a·b` is "first `b`, then `a`".
    pub fn symmetric(n: usize) -> Self {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let mul = perms
            .iter()
            .map(|a| perms.iter().map(|b| index(&b.iter().map(|&i| a[i]).collect())).collect())
            .collect();
        Self::new(mul).expect("symmetric table")
    }

    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let (m, n) = (a.order(), b.order());
        let mul = (0..m * n)
            .map(|x| (0..m * n).map(|y| a.mul(x / n, y / n) * n + b.mul(x % n, y % n)).collect())
            .collect();
        Self::new(mul).expect("product table")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// A finite groupoid. Morphism `f` goes `src[f] → tgt[f]`; `compose[g][f]`
/// is `g ∘ f` when `src[g] == tgt[f]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    n_objects: usize,
    src: Vec<usize>,
    tgt: Vec<usize>,
    compose: Vec<Vec<Option<usize>>>,
    inverse: Vec<usize>,
    identities: Vec<usize>,
}

impl Groupoid {
    pub fn new(
        n_objects: usize,
        src: Vec<usize>,
        tgt: Vec<usize>,
        compose: Vec<Vec<Option<usize>>>,
    ) -> Result<Self, GroupError> {
        let m = src.len();
        let bad = |msg: String| Err(GroupError::Groupoid(msg));
        if tgt.len() != m || compose.len() != m || compose.iter().any(|r| r.len() != m) {
            return bad("table sizes disagree".into());
        }
        if src.iter().chain(&tgt).any(|&o| o >= n_objects) {
            return bad("object index out of range".into());
        }
        for g in 0..m {
            for f in 0..m {
                match compose[g][f] {
                    Some(_) if src[g] != tgt[f] => return bad(format!("{g} ∘ {f} defined but not composable")),
                    None if src[g] == tgt[f] => return bad(format!("{g} ∘ {f} composable but undefined")),
                    Some(h) if h >= m || src[h] != src[f] || tgt[h] != tgt[g] => {
                        return bad(format!("{g} ∘ {f} has the wrong boundary"))
                    }
                    _ => {}
                }
            }
        }
        for h in 0..m {
            for g in 0..m {
                for f in 0..m {
                    if let (Some(gf), Some(hg)) = (compose[g][f], compose[h][g]) {
                        if compose[h][gf] != compose[hg][f] {
                            return bad(format!("not associative at ({h}, {g}, {f})"));
                        }
                    }
                }
            }
        }
        let mut identities = Vec::with_capacity(n_objects);
        for o in 0..n_objects {
            let found = (0..m).find(|&e| {
                src[e] == o
                    && tgt[e] == o
                    && (0..m).all(|f| (tgt[f] != o || compose[e][f] == Some(f)) && (src[f] != o || compose[f][e] == Some(f)))
            });
            match found {
                Some(e) => identities.push(e),
                None => return bad(format!("object {o} has no identity")),
            }
        }
        let mut inverse = Vec::with_capacity(m);
        for f in 0..m {
            let g = (0..m).find(|&g| {
                compose[g][f] == Some(identities[src[f]]) && compose[f][g] == Some(identities[tgt[f]])
            });
            match g {
                Some(g) => inverse.push(g),
                None => return bad(format!("morphism {f} is not invertible")),
            }
        }
        Ok(Groupoid { n_objects, src, tgt, compose, inverse, identities })
    }

    /// A group as a one-object groupoid; morphism `g` is the group element.
    pub fn from_group(g: &FiniteGroup) -> Self {
        let n = g.order();
        let compose = (0..n).map(|a| (0..n).map(|b| Some(g.mul(a, b))).collect()).collect();
        Self::new(1, vec![0; n], vec![0; n], compose).expect("group is a groupoid")
    }

    /// The pair groupoid on `n` objects: one morphism `j → i` for every pair,
    /// indexed `i * n + j`.
    pub fn pair(n: usize) -> Self {
        let m = n * n;
        let src = (0..m).map(|f| f % n).collect();
        let tgt = (0..m).map(|f| f / n).collect();
        let compose = (0..m)
            .map(|g| (0..m).map(|f| (g % n == f / n).then_some((g / n) * n + f % n)).collect())
            .collect();
        Self::new(n, src, tgt, compose).expect("pair groupoid")
    }

    /// `n` objects with identity morphisms only.
    pub fn discrete(n: usize) -> Self {
        let compose = (0..n).map(|g| (0..n).map(|f| (g == f).then_some(f)).collect()).collect();
        Self::new(n, (0..n).collect(), (0..n).collect(), compose).expect("discrete groupoid")
    }

    pub fn disjoint_union(a: &Groupoid, b: &Groupoid) -> Self {
        let (ma, oa) = (a.morphisms(), a.n_objects);
        let src = a.src.iter().copied().chain(b.src.iter().map(|o| o + oa)).collect();
        let tgt = a.tgt.iter().copied().chain(b.tgt.iter().map(|o| o + oa)).collect();
        let m = ma + b.morphisms();
        let compose = (0..m)
            .map(|g| {
                (0..m)
                    .map(|f| match (g < ma, f < ma) {
                        (true, true) => a.compose[g][f],
                        (false, false) => b.compose[g - ma][f - ma].map(|h| h + ma),
                        _ => None,
                    })
                    .collect()
            })
            .collect();
        Self::new(oa + b.n_objects, src, tgt, compose).expect("disjoint union")
    }

    pub fn objects(&self) -> usize {
        self.n_objects
    }

    pub fn morphisms(&self) -> usize {
        self.src.len()
    }

    pub fn src(&self, f: usize) -> usize {
        self.src[f]
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.tgt[f]
    }

    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g][f]
    }

    pub fn inverse(&self, f: usize) -> usize {
        self.inverse[f]
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_three_is_nonabelian_of_order_six() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(FiniteGroup::cyclic(3).is_abelian());
    }

    #[test]
    fn product_of_cyclics() {
        let v = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert_eq!(v.order(), 4);
        assert!((0..4).all(|a| v.inv(a) == a));
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(FiniteGroup::new(vec![vec![0, 0], vec![0, 0]]).is_err());
        assert!(FiniteGroup::new(vec![vec![0, 1], vec![1, 1]]).is_err());
        assert!(Groupoid::new(1, vec![0], vec![0], vec![vec![None]]).is_err());
    }

    #[test]
    fn pair_groupoid_structure() {
        let g = Groupoid::pair(2);
        assert_eq!(g.morphisms(), 4);
        // (0 ← 1) ∘ (1 ← 0) = id_0
        assert_eq!(g.compose(1, 2), Some(0));
        assert_eq!(g.inverse(1), 2);
        assert_eq!(g.identity(1), 3);
    }

    #[test]
    fn disjoint_union_of_groups() {
        let z2 = Groupoid::from_group(&FiniteGroup::cyclic(2));
        let u = Groupoid::disjoint_union(&z2, &z2);
        assert_eq!((u.objects(), u.morphisms()), (2, 4));
        assert_eq!(u.compose(0, 2), None);
        assert_eq!(u.compose(3, 3), Some(2));
    }
}
