//! Multigraded local cohomology with torus-invariant support: the fast path
//! at the fixed point straight from a free resolution, evaluation from
//! filtered injective resolutions for general invariant supports, and the
//! simplicial-cochain formula for a single localized summand.

use std::collections::BTreeMap;

use crate::duality::{bass_degree_of, injective_resolution};
use crate::error::ModuleError;
use crate::graded::{FreeResolution, GradedModule};
use crate::lattice::{ExtDegree, GcdLattice};
use crate::linalg::Matrix;

/// The supports I whose orbit { x_j = 0 exactly for j outside I } lies in
/// the invariant closed set; closed under shrinking I (orbit closure).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SupportFamily {
    faces: Vec<Vec<usize>>,
}

impl SupportFamily {
    pub fn new(mut faces: Vec<Vec<usize>>) -> Result<Self, ModuleError> {
        for f in &mut faces {
            f.sort_unstable();
            f.dedup();
        }
        faces.sort();
        faces.dedup();
        let fam = SupportFamily { faces };
        if !fam.is_closed() {
            return Err(ModuleError::InternalInvariant(
                "support family is not closed under orbit closure".into(),
            ));
        }
        Ok(fam)
    }

    /// Only the fixed point.
    pub fn point() -> Self {
        SupportFamily {
            faces: vec![vec![]],
        }
    }

    /// The whole space: every orbit.
    pub fn whole_space(n: usize) -> Self {
        let mut faces: Vec<Vec<usize>> = (0..1u32 << n)
            .map(|mask| (0..n).filter(|k| mask >> k & 1 == 1).collect())
            .collect();
        faces.sort();
        SupportFamily { faces }
    }

    pub fn contains(&self, support: &[usize]) -> bool {
        self.faces.binary_search_by(|f| f.as_slice().cmp(support)).is_ok()
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    fn is_closed(&self) -> bool {
        // removing one index from a member must stay inside
        self.faces.iter().all(|f| {
            (0..f.len()).all(|drop| {
                let smaller: Vec<usize> = f
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != drop)
                    .map(|(_, &v)| v)
                    .collect();
                self.contains(&smaller)
            })
        })
    }
}

/// Graded local cohomology at the fixed point over the gcd lattice spanned
/// by the degrees of the point Bass numbers, with one representative stored
/// per adjacency region.
#[derive(Clone, Debug)]
pub struct LocalCohomTable {
    g: GcdLattice,
    entries: Vec<BTreeMap<usize, usize>>,
    n: usize,
}

impl LocalCohomTable {
    pub fn from_parts(
        g: GcdLattice,
        entries: Vec<BTreeMap<usize, usize>>,
        n: usize,
    ) -> Result<Self, ModuleError> {
        if entries.len() != g.len() {
            return Err(ModuleError::InternalInvariant(
                "one entry per lattice element required".into(),
            ));
        }
        Ok(LocalCohomTable { g, entries, n })
    }

    pub fn gcd_lattice(&self) -> &GcdLattice {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, d: &ExtDegree) -> Option<&BTreeMap<usize, usize>> {
        self.g.index_of(d).map(|i| &self.entries[i])
    }

    /// Dimensions at an arbitrary integral degree: every such degree with a
    /// lattice element above it is adjacent to exactly one element (the meet
    /// of everything above), and shares its cohomology.
    pub fn query(&self, c: &ExtDegree) -> BTreeMap<usize, usize> {
        match self.g.min_above(c) {
            Some(d) => self.entries[self.g.index_of(&d).unwrap()].clone(),
            None => BTreeMap::new(),
        }
    }

    pub fn nonzero_entries(&self) -> Vec<(&ExtDegree, &BTreeMap<usize, usize>)> {
        self.g
            .elements()
            .iter()
            .zip(&self.entries)
            .filter(|(_, e)| !e.is_empty())
            .collect()
    }

    /// A finite box containing the adjacency region of d, when the region is
    /// bounded: per coordinate the largest lattice element that dominates d
    /// away from that coordinate caps the region from below.
    pub fn region_box(&self, d: &ExtDegree) -> Option<Vec<(i64, i64)>> {
        let di = d.as_ints()?;
        let n = di.len();
        let mut bounds = Vec::with_capacity(n);
        for k in 0..n {
            let mut lower: Option<i64> = None;
            for other in self.g.elements() {
                if other == d || d.leq(other) {
                    continue;
                }
                let oi = other.as_ints()?;
                if (0..n).all(|j| j == k || oi[j] >= di[j]) {
                    lower = Some(lower.map_or(oi[k], |b: i64| b.max(oi[k])));
                }
            }
            bounds.push((lower? + 1, di[k]));
        }
        Some(bounds)
    }

    /// All integral degrees adjacent to d, when finitely many.
    pub fn region_points(&self, d: &ExtDegree) -> Option<Vec<ExtDegree>> {
        let bounds = self.region_box(d)?;
        let mut out = Vec::new();
        let mut cursor: Vec<i64> = bounds.iter().map(|(lo, _)| *lo).collect();
        loop {
            let c = ExtDegree::from_ints(&cursor);
            if self.g.min_above(&c).as_ref() == Some(d) {
                out.push(c);
            }
            let mut k = 0;
            loop {
                if k == bounds.len() {
                    return Some(out);
                }
                cursor[k] += 1;
                if cursor[k] <= bounds[k].1 {
                    break;
                }
                cursor[k] = bounds[k].0;
                k += 1;
            }
        }
    }
}

/// Local cohomology at the fixed point in one degree, from a finite free
/// resolution: position n - j of the evaluated complex collects the summands
/// S(-c) of homological term j with d <= c - 1, with the scalar differentials
/// restricted to them.
pub fn point_local_cohomology(
    res: &FreeResolution,
    d: &ExtDegree,
) -> Result<BTreeMap<usize, usize>, ModuleError> {
    for term in &res.terms {
        for c in term {
            if !c.is_integral() {
                return Err(ModuleError::NotFinitelyGenerated);
            }
        }
    }
    let n = d.len();
    let shifted = d.plus_all(1);
    let actives: Vec<Vec<usize>> = res
        .terms
        .iter()
        .map(|t| {
            t.iter()
                .enumerate()
                .filter(|(_, c)| shifted.leq(c))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    // maps indexed by target position p: C^p -> C^{p+1} is diffs[n-p-1]
    let mut dims = vec![0usize; n + 1];
    for (j, act) in actives.iter().enumerate() {
        if n >= j {
            dims[n - j] = act.len();
        } else if !act.is_empty() {
            return Err(ModuleError::InternalInvariant(
                "resolution longer than the number of variables".into(),
            ));
        }
    }
    let mut ranks = vec![0usize; n + 1]; // ranks[p] = rank of C^p -> C^{p+1}
    for p in 0..n {
        let j = n - p; // source term index is j, target j - 1
        if j >= res.terms.len() || j == 0 {
            continue;
        }
        let dmat = &res.diffs[j - 1];
        ranks[p] = dmat.select(&actives[j - 1], &actives[j]).rank();
    }
    let mut out = BTreeMap::new();
    for p in 0..=n {
        let incoming = if p == 0 { 0 } else { ranks[p - 1] };
        let h = dims[p] - ranks[p] - incoming;
        if h > 0 {
            out.insert(p, h);
        }
    }
    Ok(out)
}

/// Evaluate the point local cohomology on the gcd lattice spanned by the
/// resolution degrees minus one; everything else follows by adjacency.
pub fn point_local_cohom_table(m: &GradedModule) -> Result<LocalCohomTable, ModuleError> {
    if !m.is_finitely_generated() {
        return Err(ModuleError::NotFinitelyGenerated);
    }
    let res = m.free_resolution()?;
    point_table_from_resolution(&res, m.n())
}

pub fn point_table_from_resolution(
    res: &FreeResolution,
    n: usize,
) -> Result<LocalCohomTable, ModuleError> {
    let mut gens: Vec<ExtDegree> = Vec::new();
    for term in &res.terms {
        for c in term {
            gens.push(c.plus_all(-1));
        }
    }
    gens.sort();
    gens.dedup();
    let g = GcdLattice::generate(&gens)?;
    let entries = g
        .elements()
        .iter()
        .map(|d| point_local_cohomology(res, d))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LocalCohomTable { g, entries, n })
}

/// Local cohomology with support in the invariant set described by the
/// family: the injective resolution filtered to the summands whose orbit
/// lies inside, evaluated in one degree.
pub fn support_local_cohomology(
    m: &GradedModule,
    family: &SupportFamily,
    d: &ExtDegree,
) -> Result<BTreeMap<usize, usize>, ModuleError> {
    let inj = injective_resolution(m)?;
    let n = m.n();
    // summands kept by the support filter and visible at degree d
    let actives: Vec<Vec<usize>> = inj
        .terms
        .iter()
        .map(|t| {
            t.iter()
                .enumerate()
                .filter(|(_, c)| family.contains(&c.support()) && d.leq(&bass_degree_of(c)))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let mut ranks = vec![0usize; n + 1];
    for p in 0..n {
        ranks[p] = inj.diffs[p].select(&actives[p + 1], &actives[p]).rank();
    }
    let mut out = BTreeMap::new();
    for p in 0..=n {
        let incoming = if p == 0 { 0 } else { ranks[p - 1] };
        let h = actives[p].len() - ranks[p] - incoming;
        if h > 0 {
            out.insert(p, h);
        }
    }
    Ok(out)
}

/// Reduced simplicial cohomology dimensions of an abstract complex given by
/// its faces (subsets of a vertex set), via augmented cochain ranks. Index
/// -1 is returned at key 0 of the result shifted by one: the map sends
/// reduced degree q to key q + 1, so the empty-face convention is explicit.
fn reduced_cohomology(vertices: &[usize], faces: &[Vec<usize>]) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    if faces.is_empty() {
        return out; // void complex
    }
    let max_dim = faces.iter().map(|f| f.len()).max().unwrap();
    // cochain spaces indexed by q = |F| - 1 from -1 up
    let by_size = |s: usize| -> Vec<&Vec<usize>> { faces.iter().filter(|f| f.len() == s).collect() };
    let field = crate::linalg::FieldSpec::Q;
    let mut ranks: Vec<usize> = Vec::new(); // rank of d: C^{q} -> C^{q+1}, q = s-1
    for s in 0..max_dim {
        let lower = by_size(s);
        let upper = by_size(s + 1);
        let mut dmat = Matrix::zero(upper.len(), lower.len(), field);
        for (ci, f) in lower.iter().enumerate() {
            for &v in vertices {
                if f.contains(&v) {
                    continue;
                }
                let mut bigger = (*f).clone();
                let pos = bigger.iter().filter(|&&w| w < v).count();
                bigger.insert(pos, v);
                if let Some(ri) = upper.iter().position(|u| **u == bigger) {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    *dmat.at_mut(ri, ci) = field.from_i64(sign);
                }
            }
        }
        ranks.push(dmat.rank());
    }
    for s in 0..=max_dim {
        let dim = by_size(s).len();
        let outgoing = ranks.get(s).copied().unwrap_or(0);
        let incoming = if s == 0 { 0 } else { ranks[s - 1] };
        let h = dim - outgoing - incoming;
        if h > 0 {
            out.insert(s as i64 - 1, h);
        }
    }
    out
}

/// Local cohomology of the localized rank-one module with shift c and
/// inverted variables I, with support in the family, in degree m. The
/// relevant simplicial complex sits on the vertices where m drops below the
/// shift; its faces are those whose orbit lies outside the support set.
pub fn divisorial_local_cohom(
    inverted: &[usize],
    shift: &ExtDegree,
    family: &SupportFamily,
    m_deg: &ExtDegree,
) -> Result<BTreeMap<usize, usize>, ModuleError> {
    let n = shift.len();
    let m_ints = m_deg
        .as_ints()
        .ok_or_else(|| ModuleError::InternalInvariant("degree must be integral".into()))?;
    let c_ints: Vec<Option<i64>> = shift.0.iter().map(|v| v.finite()).collect();
    // vertex set: coordinates outside I where the piece is cut off
    let vertices: Vec<usize> = (0..n)
        .filter(|&k| !inverted.contains(&k))
        .filter(|&k| {
            let c = c_ints[k].expect("finite shift outside the inverted set");
            m_ints[k] < -c
        })
        .collect();

    // subcomplex of faces whose orbit lies outside the support set
    let full: Vec<usize> = (0..n).collect();
    let mut faces = Vec::new();
    for mask in 0..1u32 << vertices.len() {
        let f: Vec<usize> = vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let orbit_support: Vec<usize> = full.iter().cloned().filter(|k| !f.contains(k)).collect();
        if !family.contains(&orbit_support) {
            faces.push(f);
        }
    }

    let mut out = BTreeMap::new();
    if vertices.is_empty() {
        // section degree: the complex is void exactly when the open orbit
        // piece survives the support filter
        if faces.is_empty() {
            out.insert(0, 1);
        }
        return Ok(out);
    }
    let reduced = reduced_cohomology(&vertices, &faces);
    for (q, h) in reduced {
        let p = q + 2;
        if p >= 0 {
            out.insert(p as usize, h);
        }
    }
    Ok(out)
}
