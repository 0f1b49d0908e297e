//! Extended degrees in (Z ∪ {±∞})^n, lcm/gcd lattices, finite posets,
//! Möbius function, chains and adjacency of degrees.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::LatticeError;

/// One coordinate of an extended degree. The derived order is
/// -inf < any integer < +inf; negation swaps the infinities.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
    PosInf,
}

impl ExtInt {
    pub fn neg(self) -> ExtInt {
        match self {
            ExtInt::NegInf => ExtInt::PosInf,
            ExtInt::Fin(n) => ExtInt::Fin(-n),
            ExtInt::PosInf => ExtInt::NegInf,
        }
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(n) => Some(n),
            _ => None,
        }
    }

    /// Add an integer; infinities absorb.
    pub fn plus(self, n: i64) -> ExtInt {
        match self {
            ExtInt::Fin(v) => ExtInt::Fin(v + n),
            inf => inf,
        }
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => write!(f, "-inf"),
            ExtInt::Fin(n) => write!(f, "{n}"),
            ExtInt::PosInf => write!(f, "inf"),
        }
    }
}

/// A point of (Z ∪ {±∞})^n with the componentwise partial order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtDegree(pub Vec<ExtInt>);

impl ExtDegree {
    pub fn from_ints(coords: &[i64]) -> Self {
        ExtDegree(coords.iter().map(|&n| ExtInt::Fin(n)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| matches!(c, ExtInt::Fin(_)))
    }

    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| c.finite()).collect()
    }

    /// Componentwise comparison; this is the lattice partial order, not the
    /// lexicographic `Ord` used for sorting.
    pub fn leq(&self, other: &ExtDegree) -> bool {
        assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn neg(&self) -> ExtDegree {
        ExtDegree(self.0.iter().map(|c| c.neg()).collect())
    }

    pub fn plus_all(&self, n: i64) -> ExtDegree {
        ExtDegree(self.0.iter().map(|c| c.plus(n)).collect())
    }

    /// Coordinates equal to -inf; for resolution terms this is the
    /// localization support.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| matches!(c, ExtInt::NegInf))
            .map(|(i, _)| i)
            .collect()
    }

    pub fn pos_support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| matches!(c, ExtInt::PosInf))
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for ExtDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for ExtDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Componentwise maximum.
pub fn lcm_join(a: &ExtDegree, b: &ExtDegree) -> Result<ExtDegree, LatticeError> {
    if a.len() != b.len() {
        return Err(LatticeError::LengthMismatch(a.len(), b.len()));
    }
    Ok(ExtDegree(
        a.0.iter().zip(&b.0).map(|(x, y)| (*x).max(*y)).collect(),
    ))
}

/// Componentwise minimum.
pub fn gcd_meet(a: &ExtDegree, b: &ExtDegree) -> Result<ExtDegree, LatticeError> {
    if a.len() != b.len() {
        return Err(LatticeError::LengthMismatch(a.len(), b.len()));
    }
    Ok(ExtDegree(
        a.0.iter().zip(&b.0).map(|(x, y)| (*x).min(*y)).collect(),
    ))
}

/// A finite join-closed subset of (Z ∪ {-∞})^n. Elements are kept sorted
/// lexicographically with -inf lowest, so iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LcmLattice {
    elements: Vec<ExtDegree>,
}

/// The order dual: meet-closed, no -inf coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GcdLattice {
    elements: Vec<ExtDegree>,
}

fn close_under(
    gens: &[ExtDegree],
    op: fn(&ExtDegree, &ExtDegree) -> Result<ExtDegree, LatticeError>,
) -> Result<Vec<ExtDegree>, LatticeError> {
    let mut set: BTreeSet<ExtDegree> = gens.iter().cloned().collect();
    loop {
        let mut added = Vec::new();
        let items: Vec<&ExtDegree> = set.iter().collect();
        for i in 0..items.len() {
            for j in i + 1..items.len() {
                let joined = op(items[i], items[j])?;
                if !set.contains(&joined) {
                    added.push(joined);
                }
            }
        }
        if added.is_empty() {
            break;
        }
        set.extend(added);
    }
    Ok(set.into_iter().collect())
}

impl LcmLattice {
    /// Smallest join-closed superset of the generators.
    pub fn generate(gens: &[ExtDegree]) -> Result<Self, LatticeError> {
        for g in gens {
            if g.0.iter().any(|c| matches!(c, ExtInt::PosInf)) {
                return Err(LatticeError::PlusInfinity);
            }
        }
        Ok(LcmLattice {
            elements: close_under(gens, lcm_join)?,
        })
    }

    pub fn elements(&self) -> &[ExtDegree] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, d: &ExtDegree) -> Option<usize> {
        self.elements.binary_search(d).ok()
    }

    /// The join of all lattice elements below c, when any exists. The result
    /// is itself a lattice element and is the unique maximal one below c.
    pub fn max_below(&self, c: &ExtDegree) -> Option<ExtDegree> {
        let mut acc: Option<ExtDegree> = None;
        for e in &self.elements {
            if e.leq(c) {
                acc = Some(match acc {
                    None => e.clone(),
                    Some(a) => lcm_join(&a, e).expect("equal lengths"),
                });
            }
        }
        acc
    }

    /// The comparability poset of the elements under the componentwise order.
    pub fn poset(&self) -> FinitePoset {
        FinitePoset::from_leq(self.elements.len(), |i, j| {
            self.elements[i].leq(&self.elements[j])
        })
    }

    pub fn negate(&self) -> GcdLattice {
        let mut elements: Vec<ExtDegree> = self.elements.iter().map(|e| e.neg()).collect();
        elements.sort();
        GcdLattice { elements }
    }
}

impl GcdLattice {
    pub fn generate(gens: &[ExtDegree]) -> Result<Self, LatticeError> {
        for g in gens {
            if g.0.iter().any(|c| matches!(c, ExtInt::NegInf)) {
                return Err(LatticeError::MinusInfinity);
            }
        }
        Ok(GcdLattice {
            elements: close_under(gens, gcd_meet)?,
        })
    }

    pub fn elements(&self) -> &[ExtDegree] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, d: &ExtDegree) -> Option<usize> {
        self.elements.binary_search(d).ok()
    }

    /// The meet of all lattice elements above c, when any exists.
    pub fn min_above(&self, c: &ExtDegree) -> Option<ExtDegree> {
        let mut acc: Option<ExtDegree> = None;
        for e in &self.elements {
            if c.leq(e) {
                acc = Some(match acc {
                    None => e.clone(),
                    Some(a) => gcd_meet(&a, e).expect("equal lengths"),
                });
            }
        }
        acc
    }

    pub fn negate(&self) -> LcmLattice {
        let mut elements: Vec<ExtDegree> = self.elements.iter().map(|e| e.neg()).collect();
        elements.sort();
        LcmLattice { elements }
    }
}

/// True iff the graded local cohomology at c is forced to coincide with the
/// value at d: c ≤ d and c ≤ d' fails for every d' in G that is not above d.
pub fn adjacent(c: &ExtDegree, d: &ExtDegree, g: &GcdLattice) -> Result<bool, LatticeError> {
    if g.index_of(d).is_none() {
        return Err(LatticeError::NotAnElement);
    }
    if !c.leq(d) {
        return Ok(false);
    }
    for d2 in g.elements() {
        if !d.leq(d2) && c.leq(d2) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A finite poset on indices 0..n with a cached reflexive-transitive relation.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    leq: Vec<bool>, // row-major n x n
}

impl FinitePoset {
    pub fn from_leq(n: usize, rel: impl Fn(usize, usize) -> bool) -> Self {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                leq[i * n + j] = rel(i, j);
            }
        }
        let p = FinitePoset { n, leq };
        debug_assert!(p.check_valid().is_ok());
        p
    }

    /// Build from strict order pairs; the reflexive-transitive closure is
    /// computed once and cached.
    pub fn from_strict_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(LatticeError::NotAnElement);
            }
            leq[a * n + b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        let p = FinitePoset { n, leq };
        p.check_valid()?;
        Ok(p)
    }

    fn check_valid(&self) -> Result<(), LatticeError> {
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.leq(i, j) && self.leq(j, i) {
                    return Err(LatticeError::NotAntisymmetric);
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// Cover pairs (a, b): a < b with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) && !(0..self.n).any(|z| self.lt(a, z) && self.lt(z, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn cover_successors(&self, a: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&b| self.lt(a, b) && !(0..self.n).any(|z| self.lt(a, z) && self.lt(z, b)))
            .collect()
    }

    pub fn cover_predecessors(&self, b: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| self.lt(a, b) && !(0..self.n).any(|z| self.lt(a, z) && self.lt(z, b)))
            .collect()
    }

    pub fn opposite(&self) -> FinitePoset {
        FinitePoset::from_leq(self.n, |i, j| self.leq(j, i))
    }

    /// Longest chain, counted by number of elements.
    pub fn max_chain_len(&self) -> usize {
        let mut depth = vec![0usize; self.n];
        let order = self.linear_extension();
        for &v in &order {
            depth[v] = self
                .cover_predecessors(v)
                .into_iter()
                .map(|u| depth[u])
                .max()
                .map_or(1, |d| d + 1);
        }
        depth.into_iter().max().unwrap_or(0)
    }

    /// Indices sorted so that smaller poset elements come first.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by(|&a, &b| {
            if self.lt(a, b) {
                Ordering::Less
            } else if self.lt(b, a) {
                Ordering::Greater
            } else {
                a.cmp(&b)
            }
        });
        // comparison sort on a partial order is not transitive, fix point it
        loop {
            let mut pos = vec![0usize; self.n];
            for (i, &v) in order.iter().enumerate() {
                pos[v] = i;
            }
            let mut swapped = false;
            for a in 0..self.n {
                for b in 0..self.n {
                    if self.lt(a, b) && pos[a] > pos[b] {
                        order.swap(pos[a], pos[b]);
                        swapped = true;
                    }
                }
            }
            if !swapped {
                return order;
            }
        }
    }

    /// μ(x, y): 1 on the diagonal, minus the sum over the half-open interval
    /// when x < y, zero when incomparable.
    pub fn mobius(&self, x: usize, y: usize) -> Result<i64, LatticeError> {
        if x >= self.n || y >= self.n {
            return Err(LatticeError::NotAnElement);
        }
        Ok(self.mobius_memo(x, y, &mut vec![None; self.n]))
    }

    fn mobius_memo(&self, x: usize, y: usize, memo: &mut Vec<Option<i64>>) -> i64 {
        if x == y {
            return 1;
        }
        if !self.leq(x, y) {
            return 0;
        }
        if let Some(v) = memo[y] {
            return v;
        }
        let mut sum = 0;
        for z in 0..self.n {
            if self.leq(x, z) && self.lt(z, y) {
                sum += self.mobius_memo(x, z, memo);
            }
        }
        memo[y] = Some(-sum);
        -sum
    }

    /// All chains x_l < … < x_0 = x inside the subposet
    /// {y ≤ x with dim(y) ≤ k} ∪ {x}; returned as index sequences ending in x,
    /// smallest element first.
    pub fn chains_ending_at(&self, k: usize, x: usize, dims: &[usize]) -> Vec<Vec<usize>> {
        assert_eq!(dims.len(), self.n);
        let member =
            |y: usize| -> bool { y == x || (self.leq(y, x) && y != x && dims[y] <= k) };
        let mut out = Vec::new();
        let mut stack = vec![vec![x]];
        while let Some(chain) = stack.pop() {
            out.push(chain.iter().rev().cloned().collect());
            let bottom = *chain.last().unwrap();
            for y in 0..self.n {
                if member(y) && self.lt(y, bottom) {
                    let mut next = chain.clone();
                    next.push(y);
                    stack.push(next);
                }
            }
        }
        out.sort();
        out
    }
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinitePoset(n={}, covers={:?})", self.n, self.covers())
    }
}

pub fn ext(coords: &[i64]) -> ExtDegree {
    ExtDegree::from_ints(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(coords: &[i64]) -> ExtDegree {
        ExtDegree::from_ints(coords)
    }

    #[test]
    fn join_componentwise_max() {
        assert_eq!(lcm_join(&d(&[1, 0]), &d(&[0, 2])).unwrap(), d(&[1, 2]));
    }

    #[test]
    fn join_neg_inf_is_identity() {
        let a = ExtDegree(vec![ExtInt::NegInf, ExtInt::Fin(3)]);
        let b = ExtDegree(vec![ExtInt::Fin(2), ExtInt::NegInf]);
        assert_eq!(lcm_join(&a, &b).unwrap(), d(&[2, 3]));
    }

    #[test]
    fn join_idempotent() {
        let a = d(&[5, -1]);
        assert_eq!(lcm_join(&a, &a).unwrap(), a);
    }

    #[test]
    fn join_length_mismatch() {
        assert!(lcm_join(&d(&[1]), &d(&[1, 2])).is_err());
    }

    /// Brute-force closure oracle: repeatedly add pairwise joins until stable.
    fn closure_oracle(gens: &[ExtDegree]) -> BTreeSet<ExtDegree> {
        let mut set: BTreeSet<ExtDegree> = gens.iter().cloned().collect();
        loop {
            let items: Vec<ExtDegree> = set.iter().cloned().collect();
            let before = set.len();
            for a in &items {
                for b in &items {
                    set.insert(lcm_join(a, b).unwrap());
                }
            }
            if set.len() == before {
                return set;
            }
        }
    }

    #[test]
    fn generate_closure_of_three() {
        let gens = [d(&[2, 0]), d(&[1, 1]), d(&[0, 2])];
        let l = LcmLattice::generate(&gens).unwrap();
        let expect: Vec<ExtDegree> = closure_oracle(&gens).into_iter().collect();
        assert_eq!(l.elements(), &expect[..]);
        assert_eq!(l.len(), 6);
        assert!(l.index_of(&d(&[2, 2])).is_some());
    }

    #[test]
    fn generate_artinian_generators() {
        let gens = [d(&[0, 0, 0]), d(&[2, 0, 0]), d(&[1, 1, 0]), d(&[0, 2, 0])];
        let l = LcmLattice::generate(&gens).unwrap();
        let expect: Vec<ExtDegree> = closure_oracle(&gens).into_iter().collect();
        assert_eq!(l.elements(), &expect[..]);
        assert!(l.index_of(&d(&[2, 2, 0])).is_some());
    }

    #[test]
    fn generate_singleton() {
        let l = LcmLattice::generate(&[d(&[3, 1])]).unwrap();
        assert_eq!(l.elements(), &[d(&[3, 1])]);
    }

    #[test]
    fn generate_rejects_plus_inf() {
        let bad = ExtDegree(vec![ExtInt::PosInf]);
        assert!(LcmLattice::generate(&[bad]).is_err());
    }

    #[test]
    fn max_below_is_join_of_lower_set() {
        let l = LcmLattice::generate(&[d(&[2, 0]), d(&[0, 2]), d(&[1, 1])]).unwrap();
        // (2,0) ∨ (1,1) = (2,1)
        assert_eq!(l.max_below(&d(&[2, 1])), Some(d(&[2, 1])));
        assert_eq!(l.max_below(&d(&[-1, -1])), None);
        assert_eq!(l.max_below(&d(&[1, 1])), Some(d(&[1, 1])));
    }

    #[test]
    fn gcd_lcm_duality() {
        let gens = [d(&[2, 0]), d(&[1, 1]), d(&[0, 2])];
        let neg: Vec<ExtDegree> = gens.iter().map(|g| g.neg()).collect();
        let g = GcdLattice::generate(&neg).unwrap();
        let l = LcmLattice::generate(&gens).unwrap();
        assert_eq!(g.negate(), l);
    }

    #[test]
    fn mobius_basics() {
        // diamond 0 < a, b < 1
        let p = FinitePoset::from_strict_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(p.mobius(0, 0).unwrap(), 1);
        assert_eq!(p.mobius(0, 1).unwrap(), -1);
        assert_eq!(p.mobius(0, 3).unwrap(), 1);
        assert_eq!(p.mobius(1, 2).unwrap(), 0);
    }

    #[test]
    fn mobius_inversion_on_lattice_posets() {
        let l = LcmLattice::generate(&[d(&[2, 0]), d(&[1, 1]), d(&[0, 2]), d(&[0, 0])]).unwrap();
        let p = l.poset();
        for x in 0..p.len() {
            for y in 0..p.len() {
                if p.leq(x, y) {
                    let total: i64 = (0..p.len())
                        .filter(|&z| p.leq(x, z) && p.leq(z, y))
                        .map(|z| p.mobius(x, z).unwrap())
                        .sum();
                    assert_eq!(total, i64::from(x == y));
                }
            }
        }
    }

    #[test]
    fn mobius_element_bounds() {
        let p = FinitePoset::from_strict_pairs(2, &[(0, 1)]).unwrap();
        assert!(p.mobius(0, 5).is_err());
    }

    #[test]
    fn adjacency_singleton() {
        let g = GcdLattice::generate(&[d(&[0, 0])]).unwrap();
        assert!(adjacent(&d(&[-5, -5]), &d(&[0, 0]), &g).unwrap());
    }

    #[test]
    fn adjacency_square_lattice() {
        let g =
            GcdLattice::generate(&[d(&[0, 0]), d(&[-1, 0]), d(&[0, -1]), d(&[-1, -1])]).unwrap();
        assert!(adjacent(&d(&[0, 0]), &d(&[0, 0]), &g).unwrap());
        assert!(!adjacent(&d(&[-1, 0]), &d(&[0, 0]), &g).unwrap());
    }

    #[test]
    fn adjacency_requires_le() {
        let g = GcdLattice::generate(&[d(&[0, 0])]).unwrap();
        assert!(!adjacent(&d(&[1, 0]), &d(&[0, 0]), &g).unwrap());
        assert!(adjacent(&d(&[1, 0]), &d(&[5, 5]), &g).is_err());
    }

    #[test]
    fn min_above_dual() {
        let g =
            GcdLattice::generate(&[d(&[0, 0]), d(&[-1, 0]), d(&[0, -1]), d(&[-1, -1])]).unwrap();
        assert_eq!(g.min_above(&d(&[-1, -1])), Some(d(&[-1, -1])));
        assert_eq!(g.min_above(&d(&[-3, 0])), Some(d(&[-1, 0])));
        assert_eq!(g.min_above(&d(&[1, 1])), None);
    }

    #[test]
    fn chains_in_rank_restricted_subposet() {
        // 0 < a,b < top with dims 0,1,1,2
        let p = FinitePoset::from_strict_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let dims = [0usize, 1, 1, 2];
        let chains = p.chains_ending_at(1, 3, &dims);
        // (3), (1,3), (2,3), (0,3), (0,1,3), (0,2,3)
        assert_eq!(chains.len(), 6);
        assert!(chains.contains(&vec![0, 1, 3]));
        assert!(chains.contains(&vec![3]));
        let short = p.chains_ending_at(0, 3, &dims);
        // only (3), (0,3)
        assert_eq!(short.len(), 2);
    }

    #[test]
    fn max_chain_and_linear_extension() {
        let p = FinitePoset::from_strict_pairs(4, &[(0, 1), (1, 2), (0, 3)]).unwrap();
        assert_eq!(p.max_chain_len(), 3);
        let order = p.linear_extension();
        let pos = |v: usize| order.iter().position(|&x| x == v).unwrap();
        assert!(pos(0) < pos(1) && pos(1) < pos(2) && pos(0) < pos(3));
    }
}
