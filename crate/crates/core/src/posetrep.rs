//! K-linear representations of finite posets and their minimal projective
//! and injective resolutions.
//!
//! The projective cover is built node by node: at each node the part not
//! reached from below is split off with a deterministic complement, its basis
//! becomes a block of generators, and the syzygy is the kernel of the induced
//! surjection. Iterating yields a minimal resolution whose length is bounded
//! by the longest chain of the poset. Injective resolutions are computed on
//! the opposite representation and transposed back.

use std::collections::BTreeMap;

use crate::error::RepError;
use crate::lattice::FinitePoset;
use crate::linalg::{kernel_basis, FieldSpec, Matrix, Scalar, Subspace};

/// A functor from a finite poset to finite-dimensional vector spaces:
/// a space dimension per element and a matrix per cover relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PosetRep {
    poset: FinitePoset,
    dims: Vec<usize>,
    edges: BTreeMap<(usize, usize), Matrix>, // cover pair (x, y) with x < y
    field: FieldSpec,
}

impl PosetRep {
    /// `edges` must provide a matrix for every cover pair; shapes are
    /// dims(y) x dims(x).
    pub fn new(
        poset: FinitePoset,
        dims: Vec<usize>,
        edges: BTreeMap<(usize, usize), Matrix>,
        field: FieldSpec,
    ) -> Result<Self, RepError> {
        assert_eq!(dims.len(), poset.len());
        for (x, y) in poset.covers() {
            let m = edges.get(&(x, y)).ok_or(RepError::BadEdgeShape(x, y))?;
            if m.rows() != dims[y] || m.cols() != dims[x] {
                return Err(RepError::BadEdgeShape(x, y));
            }
        }
        Ok(PosetRep {
            poset,
            dims,
            edges,
            field,
        })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, x: usize) -> usize {
        self.dims[x]
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn edge(&self, x: usize, y: usize) -> &Matrix {
        &self.edges[&(x, y)]
    }

    /// Composite along the canonical cover path from x to y (least cover
    /// first). For functorial representations this is the structure map.
    pub fn map(&self, x: usize, y: usize) -> Matrix {
        assert!(self.poset.leq(x, y), "map requires x <= y");
        if x == y {
            return Matrix::identity(self.dims[x], self.field);
        }
        let step = self
            .poset
            .cover_successors(x)
            .into_iter()
            .find(|&z| self.poset.leq(z, y))
            .expect("cover path exists");
        self.map(step, y).mul(self.edge(x, step))
    }

    /// True iff every cover path between comparable elements yields the same
    /// composite, i.e. the data is a functor.
    pub fn check_functoriality(&self) -> bool {
        for x in 0..self.poset.len() {
            for y in 0..self.poset.len() {
                if !self.poset.lt(x, y) {
                    continue;
                }
                let canonical = self.map(x, y);
                for z in self.poset.cover_successors(x) {
                    if self.poset.leq(z, y) && self.map(z, y).mul(self.edge(x, z)) != canonical {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The representation of the opposite poset with transposed maps.
    pub fn op(&self) -> PosetRep {
        let op_poset = self.poset.opposite();
        let mut edges = BTreeMap::new();
        for (x, y) in self.poset.covers() {
            edges.insert((y, x), self.edge(x, y).transpose());
        }
        PosetRep {
            poset: op_poset,
            dims: self.dims.clone(),
            edges,
            field: self.field,
        }
    }

    pub fn minimal_projective_resolution(&self) -> Result<RepResolution, RepError> {
        if !self.check_functoriality() {
            return Err(RepError::NotFunctorial);
        }
        Ok(resolve_projective(self))
    }

    /// Cohomologically indexed: diffs[i] maps term i to term i + 1.
    pub fn minimal_injective_resolution(&self) -> Result<RepResolution, RepError> {
        let mut res = self.op().minimal_projective_resolution()?;
        res.diffs = res.diffs.iter().map(Matrix::transpose).collect();
        res.injective = true;
        Ok(res)
    }
}

/// Terms of a minimal resolution: each term is the list of poset elements
/// carrying a projective (or injective) summand, one entry per copy, sorted
/// by element index. Differentials are scalar block matrices; the block from
/// a summand at x to one at y can be nonzero only when y <= x (projective
/// case) or x <= y (injective case).
#[derive(Clone, Debug)]
pub struct RepResolution {
    pub terms: Vec<Vec<usize>>,
    /// Projective: diffs[i] : terms[i+1] -> terms[i] (rows index terms[i]).
    /// Injective: diffs[i] : terms[i] -> terms[i+1] (rows index terms[i+1]).
    pub diffs: Vec<Matrix>,
    /// Generator vectors for term 0: (element, coordinates). For the
    /// projective case these are vectors in the resolved representation's
    /// spaces; the injective case stores the dual data.
    pub aug: Vec<(usize, Vec<Scalar>)>,
    pub injective: bool,
    pub field: FieldSpec,
}

impl RepResolution {
    /// Number of nonzero terms minus one.
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn multiplicities(&self, i: usize) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        if let Some(term) = self.terms.get(i) {
            for &x in term {
                *out.entry(x).or_insert(0) += 1;
            }
        }
        out
    }

    /// d ∘ d = 0 over all consecutive pairs.
    pub fn is_complex(&self) -> bool {
        self.diffs.windows(2).all(|w| {
            if self.injective {
                w[1].mul(&w[0]).is_zero()
            } else {
                w[0].mul(&w[1]).is_zero()
            }
        })
    }

    /// No nonzero scalar joins two summands at the same poset element in
    /// consecutive terms; such a pair could be split off.
    pub fn is_minimal(&self) -> bool {
        for (i, d) in self.diffs.iter().enumerate() {
            let (src, tgt) = if self.injective {
                (&self.terms[i], &self.terms[i + 1])
            } else {
                (&self.terms[i + 1], &self.terms[i])
            };
            for (r, &xt) in tgt.iter().enumerate() {
                for (c, &xs) in src.iter().enumerate() {
                    if xt == xs && !d.at(r, c).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Restriction of the differential to summands visible at y (elements
    /// below y for the projective case, above y for the injective one).
    pub fn diff_at_node(&self, i: usize, y: usize, poset: &FinitePoset) -> Matrix {
        let visible = |term: &Vec<usize>| -> Vec<usize> {
            term.iter()
                .enumerate()
                .filter(|(_, &x)| {
                    if self.injective {
                        poset.leq(y, x)
                    } else {
                        poset.leq(x, y)
                    }
                })
                .map(|(k, _)| k)
                .collect()
        };
        let (rows_term, cols_term) = if self.injective {
            (&self.terms[i + 1], &self.terms[i])
        } else {
            (&self.terms[i], &self.terms[i + 1])
        };
        self.diffs[i].select(&visible(rows_term), &visible(cols_term))
    }

    /// Graded piece of term i at element y: number of visible summands.
    pub fn term_dim_at(&self, i: usize, y: usize, poset: &FinitePoset) -> usize {
        self.terms
            .get(i)
            .map(|t| {
                t.iter()
                    .filter(|&&x| {
                        if self.injective {
                            poset.leq(y, x)
                        } else {
                            poset.leq(x, y)
                        }
                    })
                    .count()
            })
            .unwrap_or(0)
    }
}

/// Coordinate layout of a direct sum of projectives: summand k at element
/// node[k] contributes one coordinate to every y above it.
struct Layout {
    nodes: Vec<usize>,
}

impl Layout {
    fn active(&self, poset: &FinitePoset, y: usize) -> Vec<usize> {
        self.nodes
            .iter()
            .enumerate()
            .filter(|(_, &x)| poset.leq(x, y))
            .map(|(k, _)| k)
            .collect()
    }
}

/// Scatter a vector indexed by `from` positions into one indexed by `into`
/// positions; `from` must be a subset of `into` in order.
fn scatter(v: &[Scalar], from: &[usize], into: &[usize], field: FieldSpec) -> Vec<Scalar> {
    let mut out = vec![field.zero(); into.len()];
    let mut pos = 0usize;
    for (vi, &s) in from.iter().enumerate() {
        while into[pos] != s {
            pos += 1;
        }
        out[pos] = v[vi].clone();
    }
    out
}

fn resolve_projective(rep: &PosetRep) -> RepResolution {
    let poset = rep.poset();
    let n = poset.len();
    let field = rep.field();

    // structure maps for all comparable pairs, computed once
    let mut maps: BTreeMap<(usize, usize), Matrix> = BTreeMap::new();
    for x in 0..n {
        for y in 0..n {
            if poset.leq(x, y) {
                maps.insert((x, y), rep.map(x, y));
            }
        }
    }

    let mut terms: Vec<Vec<usize>> = Vec::new();
    let mut diffs: Vec<Matrix> = Vec::new();

    // First cover: generators of the representation itself.
    let mut gens: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for x in 0..n {
        let full = Subspace::full(rep.dim_at(x), field);
        let mut reached = Subspace::zero(rep.dim_at(x), field);
        for y in poset.cover_predecessors(x) {
            if rep.dim_at(y) == 0 {
                continue;
            }
            let img = crate::linalg::image_basis(&maps[&(y, x)]);
            reached = reached.sum(&img);
        }
        let comp = Subspace::complement_in(&reached, &full).expect("reached is inside the space");
        for r in 0..comp.dim() {
            gens.push((x, comp.basis().row_vec(r)));
        }
    }
    gens.sort_by_key(|(x, _)| *x);
    terms.push(gens.iter().map(|(x, _)| *x).collect());
    let aug = gens.clone();

    let layout = Layout {
        nodes: terms[0].clone(),
    };
    // kernel of the cover at every node, in ambient coordinates of the sum
    let mut syzygy: Vec<Subspace> = (0..n)
        .map(|y| {
            let active = layout.active(poset, y);
            let cols: Vec<Vec<Scalar>> = active
                .iter()
                .map(|&k| {
                    let (x, g) = &gens[k];
                    maps[&(*x, y)].apply(g)
                })
                .collect();
            let mut m = Matrix::zero(rep.dim_at(y), active.len(), field);
            for (ci, col) in cols.iter().enumerate() {
                for (ri, v) in col.iter().enumerate() {
                    *m.at_mut(ri, ci) = v.clone();
                }
            }
            kernel_basis(&m)
        })
        .collect();
    let mut prev_layout = layout;

    loop {
        if syzygy.iter().all(|s| s.dim() == 0) {
            break;
        }
        // generators of the syzygy: parts not reached from strictly below
        let mut new_gens: Vec<(usize, Vec<Scalar>)> = Vec::new();
        for x in 0..n {
            if syzygy[x].dim() == 0 {
                continue;
            }
            let active_x = prev_layout.active(poset, x);
            let mut reached = Subspace::zero(active_x.len(), field);
            for y in poset.cover_predecessors(x) {
                if syzygy[y].dim() == 0 {
                    continue;
                }
                let active_y = prev_layout.active(poset, y);
                let rows: Vec<Vec<Scalar>> = (0..syzygy[y].dim())
                    .map(|r| scatter(syzygy[y].basis().row(r), &active_y, &active_x, field))
                    .collect();
                reached = reached.sum(&Subspace::from_rows(active_x.len(), rows, field));
            }
            let comp =
                Subspace::complement_in(&reached, &syzygy[x]).expect("images lie in the syzygy");
            for r in 0..comp.dim() {
                new_gens.push((x, comp.basis().row_vec(r)));
            }
        }
        new_gens.sort_by_key(|(x, _)| *x);

        // scalar differential: coordinates of each generator in the previous sum
        let prev_nodes = prev_layout.nodes.clone();
        let mut d = Matrix::zero(prev_nodes.len(), new_gens.len(), field);
        for (c, (x, g)) in new_gens.iter().enumerate() {
            let active_x = prev_layout.active(poset, *x);
            for (vi, &summand) in active_x.iter().enumerate() {
                *d.at_mut(summand, c) = g[vi].clone();
            }
        }
        terms.push(new_gens.iter().map(|(x, _)| *x).collect());
        diffs.push(d);

        let layout = Layout {
            nodes: terms.last().unwrap().clone(),
        };
        syzygy = (0..n)
            .map(|y| {
                let active = layout.active(poset, y);
                let ambient_prev = prev_layout.active(poset, y);
                let mut m = Matrix::zero(ambient_prev.len(), active.len(), field);
                for (ci, &k) in active.iter().enumerate() {
                    let (x, g) = &new_gens[k];
                    let active_x = prev_layout.active(poset, *x);
                    let col = scatter(g, &active_x, &ambient_prev, field);
                    for (ri, v) in col.iter().enumerate() {
                        *m.at_mut(ri, ci) = v.clone();
                    }
                }
                kernel_basis(&m)
            })
            .collect();
        prev_layout = layout;
    }

    let res = RepResolution {
        terms,
        diffs,
        aug,
        injective: false,
        field,
    };
    debug_assert!(res.is_complex());
    debug_assert!(res.is_minimal());
    res
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::FinitePoset;

    fn q() -> FieldSpec {
        FieldSpec::Q
    }

    fn id_edges(poset: &FinitePoset, dims: &[usize]) -> BTreeMap<(usize, usize), Matrix> {
        poset
            .covers()
            .into_iter()
            .map(|(x, y)| {
                assert_eq!(dims[x], dims[y]);
                ((x, y), Matrix::identity(dims[x], q()))
            })
            .collect()
    }

    fn diamond() -> FinitePoset {
        FinitePoset::from_strict_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn identity_functor_is_functorial() {
        let p = diamond();
        let dims = vec![1, 1, 1, 1];
        let rep = PosetRep::new(p.clone(), dims.clone(), id_edges(&p, &dims), q()).unwrap();
        assert!(rep.check_functoriality());
    }

    #[test]
    fn inconsistent_diamond_detected() {
        let p = diamond();
        let dims = vec![1, 1, 1, 1];
        let mut edges = id_edges(&p, &dims);
        edges.insert((2, 3), Matrix::from_i64(1, 1, &[2], q()));
        let rep = PosetRep::new(p, dims, edges, q()).unwrap();
        assert!(!rep.check_functoriality());
        assert!(rep.minimal_projective_resolution().is_err());
    }

    #[test]
    fn chain_always_functorial() {
        let p = FinitePoset::from_strict_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let dims = vec![2, 2, 2];
        let mut edges = BTreeMap::new();
        edges.insert((0, 1), Matrix::from_i64(2, 2, &[1, 2, 0, 1], q()));
        edges.insert((1, 2), Matrix::from_i64(2, 2, &[3, 0, 1, 1], q()));
        let rep = PosetRep::new(p, dims, edges, q()).unwrap();
        assert!(rep.check_functoriality());
    }

    /// P_x on the diamond: K at every node above x = 1, identity maps.
    fn projective_at(p: &FinitePoset, x0: usize) -> PosetRep {
        let dims: Vec<usize> = (0..p.len()).map(|y| usize::from(p.leq(x0, y))).collect();
        let edges = p
            .covers()
            .into_iter()
            .map(|(x, y)| ((x, y), Matrix::identity(dims[x].min(dims[y]), q())))
            .map(|((x, y), m)| {
                let m = if dims[x] == dims[y] {
                    m
                } else {
                    Matrix::zero(dims[y], dims[x], q())
                };
                ((x, y), m)
            })
            .collect();
        PosetRep::new(p.clone(), dims, edges, q()).unwrap()
    }

    #[test]
    fn projective_input_has_length_zero() {
        let p = diamond();
        let rep = projective_at(&p, 1);
        let res = rep.minimal_projective_resolution().unwrap();
        assert_eq!(res.length(), 0);
        assert_eq!(res.multiplicities(0), BTreeMap::from([(1, 1)]));
    }

    /// Intersection poset of three distinct lines through the origin of K^2:
    /// bottom (origin, dim 0), three lines (dim 1), top (the plane, dim 2).
    fn three_lines_rep() -> PosetRep {
        let p =
            FinitePoset::from_strict_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
                .unwrap();
        let dims = vec![0, 1, 1, 1, 2];
        let mut edges = BTreeMap::new();
        for l in 1..=3 {
            edges.insert((0, l), Matrix::zero(1, 0, q()));
        }
        edges.insert((1, 4), Matrix::from_i64(2, 1, &[1, 0], q()));
        edges.insert((2, 4), Matrix::from_i64(2, 1, &[0, 1], q()));
        edges.insert((3, 4), Matrix::from_i64(2, 1, &[1, 1], q()));
        PosetRep::new(p, dims, edges, q()).unwrap()
    }

    #[test]
    fn three_lines_resolution() {
        let rep = three_lines_rep();
        let res = rep.minimal_projective_resolution().unwrap();
        assert_eq!(res.length(), 1);
        assert_eq!(
            res.multiplicities(0),
            BTreeMap::from([(1, 1), (2, 1), (3, 1)])
        );
        assert_eq!(res.multiplicities(1), BTreeMap::from([(4, 1)]));
        assert!(res.is_complex());
        assert!(res.is_minimal());
    }

    /// Exactness at every poset element by rank counting.
    fn assert_exact(rep: &PosetRep, res: &RepResolution) {
        let poset = rep.poset();
        for y in 0..poset.len() {
            // augmentation: cover surjects onto the space with kernel = image of d1
            let active: Vec<&(usize, Vec<Scalar>)> = res
                .aug
                .iter()
                .filter(|(x, _)| poset.leq(*x, y))
                .collect();
            let mut cover = Matrix::zero(rep.dim_at(y), active.len(), rep.field());
            for (ci, (x, g)) in active.iter().enumerate() {
                let img = rep.map(*x, y).apply(g);
                for (ri, v) in img.iter().enumerate() {
                    *cover.at_mut(ri, ci) = v.clone();
                }
            }
            assert_eq!(cover.rank(), rep.dim_at(y), "cover not onto at {y}");
            let mut prev_rank = cover.cols() - cover.rank(); // dim ker of the cover
            for i in 0..res.diffs.len() {
                let d = res.diff_at_node(i, y, poset);
                assert_eq!(d.rank(), prev_rank, "not exact at position {} node {y}", i + 1);
                prev_rank = d.cols() - d.rank();
            }
            assert_eq!(prev_rank, 0, "resolution does not terminate at {y}");
        }
    }

    #[test]
    fn three_lines_resolution_is_exact() {
        let rep = three_lines_rep();
        let res = rep.minimal_projective_resolution().unwrap();
        assert_exact(&rep, &res);
    }

    #[test]
    fn length_bounded_by_chains() {
        let rep = three_lines_rep();
        let res = rep.minimal_projective_resolution().unwrap();
        assert!(res.length() + 1 <= rep.poset().max_chain_len());
    }

    #[test]
    fn euler_characteristic_matches_top_dimension() {
        let rep = three_lines_rep();
        let res = rep.minimal_projective_resolution().unwrap();
        let top = 4;
        let mut chi = 0i64;
        for (i, term) in res.terms.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            chi += sign * term.len() as i64; // every element is below the top
        }
        assert_eq!(chi, rep.dim_at(top) as i64);
    }

    #[test]
    fn injective_of_injective_is_length_zero() {
        // the constant functor on a poset with a top is I_top
        let p = diamond();
        let dims = vec![1, 1, 1, 1];
        let rep = PosetRep::new(p.clone(), dims.clone(), id_edges(&p, &dims), q()).unwrap();
        let res = rep.minimal_injective_resolution().unwrap();
        assert_eq!(res.length(), 0);
        assert_eq!(res.multiplicities(0), BTreeMap::from([(3, 1)]));
    }

    #[test]
    fn simple_at_maximum_two_chain() {
        // 0 < 1, simple at the top: 0 -> F -> I_1 -> I_0 -> 0
        let p = FinitePoset::from_strict_pairs(2, &[(0, 1)]).unwrap();
        let dims = vec![0, 1];
        let mut edges = BTreeMap::new();
        edges.insert((0, 1), Matrix::zero(1, 0, q()));
        let rep = PosetRep::new(p, dims, edges, q()).unwrap();
        let res = rep.minimal_injective_resolution().unwrap();
        assert_eq!(res.length(), 1);
        assert_eq!(res.multiplicities(0), BTreeMap::from([(1, 1)]));
        assert_eq!(res.multiplicities(1), BTreeMap::from([(0, 1)]));
    }

    #[test]
    fn simple_at_minimum_is_already_injective() {
        let p = FinitePoset::from_strict_pairs(2, &[(0, 1)]).unwrap();
        let dims = vec![1, 0];
        let mut edges = BTreeMap::new();
        edges.insert((0, 1), Matrix::zero(0, 1, q()));
        let rep = PosetRep::new(p, dims, edges, q()).unwrap();
        let res = rep.minimal_injective_resolution().unwrap();
        assert_eq!(res.length(), 0);
        assert_eq!(res.multiplicities(0), BTreeMap::from([(0, 1)]));
    }
}
