//! Z^n-graded modules in zipped form: a finite lcm lattice of degrees
//! together with a poset representation on it. Constructors from filtration
//! data, monomial generators and explicit box data; evaluation of graded
//! pieces; minimal free resolutions and Betti tables; a brute-force
//! exactness oracle over finite degree boxes.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::ModuleError;
use crate::lattice::{ExtDegree, ExtInt, LcmLattice};
use crate::linalg::{FieldSpec, Matrix, Scalar, Subspace};
use crate::posetrep::PosetRep;

/// A vector space with n full increasing filtrations: empty below the first
/// step of each filtration and the full space at the last.
#[derive(Clone, Debug)]
pub struct FiltrationData {
    pub ambient: usize,
    pub field: FieldSpec,
    /// One filtration per coordinate: strictly increasing (step, space) pairs
    /// with strictly growing dimensions, the last space being all of K^r.
    pub steps: Vec<Vec<(i64, Subspace)>>,
}

impl FiltrationData {
    pub fn n(&self) -> usize {
        self.steps.len()
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        for (k, filt) in self.steps.iter().enumerate() {
            if filt.is_empty() {
                return Err(ModuleError::NotNested(format!("filtration {k} is empty")));
            }
            for w in filt.windows(2) {
                if w[0].0 >= w[1].0 {
                    return Err(ModuleError::NotNested(format!(
                        "filtration {k}: steps not strictly increasing"
                    )));
                }
                if !w[1].1.contains(&w[0].1) || w[0].1.dim() >= w[1].1.dim() {
                    return Err(ModuleError::NotNested(format!(
                        "filtration {k}: spaces not strictly nested"
                    )));
                }
            }
            let last = &filt.last().unwrap().1;
            if last.dim() != self.ambient {
                return Err(ModuleError::NotNested(format!(
                    "filtration {k}: last space is not the full space"
                )));
            }
        }
        Ok(())
    }

    /// E^k(i): zero below the first step, constant between steps.
    pub fn space_at(&self, k: usize, i: i64) -> Subspace {
        let filt = &self.steps[k];
        let mut current = Subspace::zero(self.ambient, self.field);
        for (step, space) in filt {
            if *step <= i {
                current = space.clone();
            }
        }
        current
    }
}

/// A module zipped onto an admissible lcm lattice.
#[derive(Clone, Debug)]
pub struct GradedModule {
    lattice: LcmLattice,
    rep: PosetRep,
}

/// One free (or localized) summand S(-degree) per entry; -inf coordinates
/// mark the inverted variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeResolution {
    /// terms[i] lists the shift degree of every summand, one entry per copy.
    pub terms: Vec<Vec<ExtDegree>>,
    /// diffs[i] : terms[i+1] -> terms[i]; rows index terms[i]. An entry may
    /// be nonzero only if the row degree is <= the column degree.
    pub diffs: Vec<Matrix>,
    /// Generator data for the augmentation terms[0] -> E: for each summand
    /// its image in the module's graded piece at the summand degree.
    pub aug: Vec<(ExtDegree, Vec<Scalar>)>,
    pub field: FieldSpec,
}

/// Multiplicity of S_I(-c) in homological position i; the support I is the
/// set of -inf coordinates of c.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiTable(pub BTreeMap<(usize, ExtDegree), usize>);

impl BettiTable {
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().map(|(i, _)| *i).max()
    }
}

impl GradedModule {
    /// Wrap explicit lattice and representation data. The representation must
    /// be functorial and indexed compatibly with the lattice elements.
    pub fn from_parts(lattice: LcmLattice, rep: PosetRep) -> Result<Self, ModuleError> {
        if rep.poset().len() != lattice.len() {
            return Err(ModuleError::InternalInvariant(
                "lattice and representation sizes differ".into(),
            ));
        }
        if !rep.check_functoriality() {
            return Err(crate::error::RepError::NotFunctorial.into());
        }
        Ok(GradedModule { lattice, rep })
    }

    pub fn lattice(&self) -> &LcmLattice {
        &self.lattice
    }

    pub fn rep(&self) -> &PosetRep {
        &self.rep
    }

    pub fn field(&self) -> FieldSpec {
        self.rep.field()
    }

    pub fn n(&self) -> usize {
        self.lattice.elements()[0].len()
    }

    pub fn is_finitely_generated(&self) -> bool {
        self.lattice
            .elements()
            .iter()
            .all(|d| d.support().is_empty())
    }

    /// Dimension of the graded piece at c: the value at the maximal lattice
    /// element below c, or zero when none exists. +inf query coordinates are
    /// allowed and evaluate the stable localized piece.
    pub fn unzip_dim(&self, c: &ExtDegree) -> usize {
        match self.lattice.max_below(c) {
            Some(m) => self.rep.dim_at(self.lattice.index_of(&m).unwrap()),
            None => 0,
        }
    }

    /// Structure map E_c -> E_c' for c <= c', in the canonical node bases.
    pub fn unzip_map(&self, c: &ExtDegree, c2: &ExtDegree) -> Option<Matrix> {
        let a = self.lattice.max_below(c)?;
        let b = self.lattice.max_below(c2)?;
        let ia = self.lattice.index_of(&a).unwrap();
        let ib = self.lattice.index_of(&b).unwrap();
        Some(self.rep.map(ia, ib))
    }

    /// The rank: dimension of the stable piece at +inf in every coordinate.
    pub fn rank(&self) -> usize {
        let top = ExtDegree(vec![ExtInt::PosInf; self.n()]);
        self.unzip_dim(&top)
    }

    /// Module built from n full filtrations of K^r. The lattice consists of
    /// all intersections of filtration spaces keyed by their minimal degrees;
    /// the zero intersection is kept (with a zero space) when it arises.
    pub fn from_filtrations(data: &FiltrationData) -> Result<Self, ModuleError> {
        data.validate()?;
        let field = data.field;
        let n = data.n();

        // close the step spaces (plus the full space) under intersection
        let mut spaces: Vec<Subspace> = vec![Subspace::full(data.ambient, field)];
        for filt in &data.steps {
            for (_, s) in filt {
                if !spaces.contains(s) {
                    spaces.push(s.clone());
                }
            }
        }
        loop {
            let mut added = Vec::new();
            for i in 0..spaces.len() {
                for j in i + 1..spaces.len() {
                    let inter = spaces[i].intersect(&spaces[j])?;
                    if !spaces.contains(&inter) && !added.contains(&inter) {
                        added.push(inter);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            spaces.extend(added);
        }

        // minimal degree of each intersection: per coordinate the first step
        // whose space contains it
        let degree_of = |x: &Subspace| -> ExtDegree {
            let coords: Vec<ExtInt> = (0..n)
                .map(|k| {
                    let (step, _) = data.steps[k]
                        .iter()
                        .find(|(_, s)| s.contains(x))
                        .expect("last step is the full space");
                    ExtInt::Fin(*step)
                })
                .collect();
            ExtDegree(coords)
        };

        let mut keyed: Vec<(ExtDegree, Subspace)> =
            spaces.into_iter().map(|s| (degree_of(&s), s)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);

        let elements: Vec<ExtDegree> = keyed.iter().map(|(d, _)| d.clone()).collect();
        let lattice = LcmLattice::generate(&elements)?;
        if lattice.elements() != elements.as_slice() {
            return Err(ModuleError::InternalInvariant(
                "intersection degrees are not join-closed".into(),
            ));
        }

        let poset = lattice.poset();
        let dims: Vec<usize> = keyed.iter().map(|(_, s)| s.dim()).collect();
        let mut edges = BTreeMap::new();
        for (i, j) in poset.covers() {
            // inclusion of the smaller space expressed in the bigger basis
            let (_, small) = &keyed[i];
            let (_, big) = &keyed[j];
            let mut m = Matrix::zero(big.dim(), small.dim(), field);
            for c in 0..small.dim() {
                let coords = big
                    .coordinates(small.basis().row(c))
                    .expect("nested spaces");
                for (r, v) in coords.iter().enumerate() {
                    *m.at_mut(r, c) = v.clone();
                }
            }
            edges.insert((i, j), m);
        }
        let rep = PosetRep::new(poset, dims, edges, field)?;
        Ok(GradedModule { lattice, rep })
    }

    /// The module generated by monomials x^c for the given exponent vectors:
    /// lcm closure of the generators, every node one-dimensional, every edge
    /// the identity.
    pub fn from_monomial_ideal(
        gens: &[ExtDegree],
        field: FieldSpec,
    ) -> Result<Self, ModuleError> {
        for g in gens {
            match g.as_ints() {
                Some(v) if v.iter().all(|&x| x >= 0) => {}
                _ => return Err(ModuleError::NegativeGenerator),
            }
        }
        let lattice = LcmLattice::generate(gens)?;
        let poset = lattice.poset();
        let dims = vec![1usize; lattice.len()];
        let edges = poset
            .covers()
            .into_iter()
            .map(|(x, y)| ((x, y), Matrix::identity(1, field)))
            .collect();
        let rep = PosetRep::new(poset, dims, edges, field)?;
        Ok(GradedModule { lattice, rep })
    }

    /// Minimal free resolution: the poset-level projective resolution with
    /// each projective mapped to its graded summand S(-c) (localized when c
    /// has -inf coordinates).
    pub fn free_resolution(&self) -> Result<FreeResolution, ModuleError> {
        let res = self.rep.minimal_projective_resolution()?;
        let deg = |i: usize| self.lattice.elements()[i].clone();
        let terms: Vec<Vec<ExtDegree>> = res
            .terms
            .iter()
            .map(|t| t.iter().map(|&x| deg(x)).collect())
            .collect();
        let aug = res
            .aug
            .iter()
            .map(|(x, v)| (deg(*x), v.clone()))
            .collect();
        let out = FreeResolution {
            terms,
            diffs: res.diffs,
            aug,
            field: self.field(),
        };
        debug_assert!(out.monomial_condition_holds());
        Ok(out)
    }

    pub fn betti_table(&self) -> Result<BettiTable, ModuleError> {
        Ok(self.free_resolution()?.betti_table())
    }

    /// Brute-force exactness oracle on an integral box. Checks, degree by
    /// degree, that the restricted scalar complex is exact in positions >= 1
    /// and that the augmentation is onto the graded piece with the right
    /// kernel. Distinct degrees seeing the same summands share one rank
    /// computation.
    pub fn verify_exactness(
        &self,
        res: &FreeResolution,
        lo: &[i64],
        hi: &[i64],
    ) -> Result<bool, ModuleError> {
        let n = self.n();
        assert!(lo.len() == n && hi.len() == n);
        for term in &res.terms {
            for d in term {
                for (k, c) in d.0.iter().enumerate() {
                    if let ExtInt::Fin(v) = c {
                        if *v - 1 < lo[k] || *v + 1 > hi[k] {
                            return Err(ModuleError::BoxTooSmall);
                        }
                    }
                }
            }
        }

        let mut memo: BTreeMap<(Vec<Vec<bool>>, Option<ExtDegree>), bool> = BTreeMap::new();
        let mut cursor = lo.to_vec();
        loop {
            let c = ExtDegree::from_ints(&cursor);
            let actives: Vec<Vec<bool>> = res
                .terms
                .iter()
                .map(|t| t.iter().map(|d| d.leq(&c)).collect())
                .collect();
            let node = self.lattice.max_below(&c);
            let key = (actives.clone(), node.clone());
            let ok = *memo
                .entry(key)
                .or_insert_with(|| exact_at(self, res, &actives, node.as_ref()));
            if !ok {
                return Ok(false);
            }
            // advance the box cursor
            let mut k = 0;
            loop {
                if k == n {
                    return Ok(true);
                }
                cursor[k] += 1;
                if cursor[k] <= hi[k] {
                    break;
                }
                cursor[k] = lo[k];
                k += 1;
            }
        }
    }
}

fn exact_at(
    module: &GradedModule,
    res: &FreeResolution,
    actives: &[Vec<bool>],
    node: Option<&ExtDegree>,
) -> bool {
    let field = res.field;
    let dim_e = match node {
        Some(nd) => module.rep.dim_at(module.lattice.index_of(nd).unwrap()),
        None => 0,
    };
    let dims: Vec<usize> = actives
        .iter()
        .map(|a| a.iter().filter(|&&b| b).count())
        .collect();

    // augmentation: map active generators into E_c
    let aug_matrix = match node {
        None => Matrix::zero(0, dims[0], field),
        Some(nd) => {
            let ni = module.lattice.index_of(nd).unwrap();
            let cols: Vec<Vec<Scalar>> = res
                .aug
                .iter()
                .zip(&actives[0])
                .filter(|(_, act)| **act)
                .map(|((d, g), _)| {
                    let src = module
                        .lattice
                        .index_of(d)
                        .expect("generator degree in lattice");
                    module.rep.map(src, ni).apply(g)
                })
                .collect();
            let mut m = Matrix::zero(dim_e, cols.len(), field);
            for (ci, col) in cols.iter().enumerate() {
                for (ri, v) in col.iter().enumerate() {
                    *m.at_mut(ri, ci) = v.clone();
                }
            }
            m
        }
    };
    if aug_matrix.rank() != dim_e {
        return false;
    }

    let restricted: Vec<Matrix> = res
        .diffs
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let rows: Vec<usize> = actives[i]
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(k, _)| k)
                .collect();
            let cols: Vec<usize> = actives[i + 1]
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(k, _)| k)
                .collect();
            d.select(&rows, &cols)
        })
        .collect();

    // the evaluated sequence must be a complex, not just have matching ranks
    if let Some(d1) = restricted.first() {
        if !aug_matrix.mul(d1).is_zero() {
            return false;
        }
    }
    for w in restricted.windows(2) {
        if !w[0].mul(&w[1]).is_zero() {
            return false;
        }
    }

    let ranks: Vec<usize> = restricted.iter().map(Matrix::rank).collect();
    // exactness at position 0: ker(aug) = im(d_1)
    let r1 = ranks.first().copied().unwrap_or(0);
    if dims[0] != dim_e + r1 {
        return false;
    }
    // positions >= 1
    for i in 1..dims.len() {
        let incoming = ranks.get(i).copied().unwrap_or(0);
        if dims[i] != ranks[i - 1] + incoming {
            return false;
        }
    }
    true
}

impl FreeResolution {
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }

    pub fn betti_table(&self) -> BettiTable {
        let mut t = BTreeMap::new();
        for (i, term) in self.terms.iter().enumerate() {
            for d in term {
                *t.entry((i, d.clone())).or_insert(0) += 1;
            }
        }
        BettiTable(t)
    }

    /// A nonzero entry from a source summand S_I(-c_s) to a target S_J(-c_t)
    /// needs a nonzero map between them: I ⊆ J and c_t <= c_s.
    pub fn monomial_condition_holds(&self) -> bool {
        for (i, d) in self.diffs.iter().enumerate() {
            for r in 0..d.rows() {
                for c in 0..d.cols() {
                    if d.at(r, c).is_zero() {
                        continue;
                    }
                    let target = &self.terms[i][r];
                    let source = &self.terms[i + 1][c];
                    let supp_ok = source
                        .support()
                        .iter()
                        .all(|k| target.support().contains(k));
                    if !supp_ok || !target.leq(source) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_complex(&self) -> bool {
        self.diffs.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }
}

/// Explicit module data on an integral box: the module vanishes below the
/// box and is constant above it. `dims` and the step maps are indexed by box
/// offsets in row-major order (last coordinate fastest).
pub struct BoxData {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    /// maps[k][idx]: the multiplication step from the degree at idx to the
    /// one at idx + e_k, present whenever both endpoints are in the box.
    pub maps: Vec<Vec<Option<Matrix>>>,
}

impl BoxData {
    pub fn n(&self) -> usize {
        self.lo.len()
    }

    fn strides(&self) -> Vec<usize> {
        let n = self.n();
        let widths: Vec<usize> = (0..n)
            .map(|k| (self.hi[k] - self.lo[k] + 1) as usize)
            .collect();
        let mut s = vec![1usize; n];
        for k in (0..n.saturating_sub(1)).rev() {
            s[k] = s[k + 1] * widths[k + 1];
        }
        s
    }

    fn index(&self, c: &[i64]) -> usize {
        let strides = self.strides();
        (0..self.n())
            .map(|k| (c[k] - self.lo[k]) as usize * strides[k])
            .sum()
    }

    fn in_box(&self, c: &[i64]) -> bool {
        (0..self.n()).all(|k| self.lo[k] <= c[k] && c[k] <= self.hi[k])
    }

    /// Graded dimension with the vanish-below / constant-above convention.
    pub fn dim_at(&self, c: &ExtDegree) -> usize {
        if c.0.iter().any(|x| matches!(x, ExtInt::NegInf)) {
            return 0;
        }
        let ints: Vec<i64> = c
            .0
            .iter()
            .map(|x| match x {
                ExtInt::Fin(v) => *v,
                ExtInt::PosInf => i64::MAX,
                ExtInt::NegInf => unreachable!(),
            })
            .collect();
        if (0..self.n()).any(|k| ints[k] < self.lo[k]) {
            return 0;
        }
        let clamped: Vec<i64> = (0..self.n()).map(|k| ints[k].min(self.hi[k])).collect();
        self.dims[self.index(&clamped)]
    }

    /// Composite map between clamped degrees, walking one coordinate at a time.
    pub fn map_between(&self, from: &ExtDegree, to: &ExtDegree) -> Matrix {
        let df = self.dim_at(from);
        let dt = self.dim_at(to);
        if df == 0 || dt == 0 {
            return Matrix::zero(dt, df, self.field);
        }
        let clamp = |d: &ExtDegree| -> Vec<i64> {
            d.0.iter()
                .zip(&self.hi)
                .map(|(v, h)| match v {
                    ExtInt::Fin(x) => (*x).min(*h),
                    ExtInt::PosInf => *h,
                    ExtInt::NegInf => unreachable!("zero piece handled above"),
                })
                .collect()
        };
        let f = clamp(from);
        let t = clamp(to);
        let mut m = Matrix::identity(df, self.field);
        let mut cur = f;
        for k in 0..self.n() {
            while cur[k] < t[k] {
                let step = self.maps[k][self.index(&cur)]
                    .as_ref()
                    .expect("step inside the box");
                m = step.mul(&m);
                cur[k] += 1;
            }
        }
        m
    }

    fn check_commuting(&self) -> Result<(), ModuleError> {
        let n = self.n();
        let mut cursor = self.lo.clone();
        loop {
            for k in 0..n {
                for l in k + 1..n {
                    let mut ck = cursor.clone();
                    ck[k] += 1;
                    let mut cl = cursor.clone();
                    cl[l] += 1;
                    let mut both = cursor.clone();
                    both[k] += 1;
                    both[l] += 1;
                    if !self.in_box(&both) {
                        continue;
                    }
                    let a = self.maps[l][self.index(&ck)]
                        .as_ref()
                        .unwrap()
                        .mul(self.maps[k][self.index(&cursor)].as_ref().unwrap());
                    let b = self.maps[k][self.index(&cl)]
                        .as_ref()
                        .unwrap()
                        .mul(self.maps[l][self.index(&cursor)].as_ref().unwrap());
                    if a != b {
                        return Err(ModuleError::InternalInvariant(
                            "box data maps do not commute".into(),
                        ));
                    }
                }
            }
            let mut k = 0;
            loop {
                if k == n {
                    return Ok(());
                }
                cursor[k] += 1;
                if cursor[k] <= self.hi[k] {
                    break;
                }
                cursor[k] = self.lo[k];
                k += 1;
            }
        }
    }
}

impl GradedModule {
    /// Derive an admissible lattice from explicit box data: for every degree
    /// in (and one step around) the box, the minimal extended degrees from
    /// which the module looks constant, closed under joins. The result can be
    /// larger than a minimal admissible lattice.
    pub fn from_box(data: &BoxData) -> Result<Self, ModuleError> {
        data.check_commuting()?;
        let n = data.n();
        let field = data.field;

        // candidate coordinate values: -inf plus the box range extended by one
        let coord_values: Vec<Vec<ExtInt>> = (0..n)
            .map(|k| {
                let mut v = vec![ExtInt::NegInf];
                for x in data.lo[k] - 1..=data.hi[k] + 1 {
                    v.push(ExtInt::Fin(x));
                }
                v
            })
            .collect();
        let grid = cartesian(&coord_values);

        let iso = |a: &ExtDegree, b: &ExtDegree| -> bool {
            let da = data.dim_at(a);
            let db = data.dim_at(b);
            if da != db {
                return false;
            }
            if da == 0 {
                return true;
            }
            data.map_between(a, b).rank() == da
        };

        let mut gens: BTreeSet<ExtDegree> = BTreeSet::new();
        for c in grid.iter().filter(|c| c.is_integral()) {
            // minimal c' <= c with every intermediate grid point isomorphic to c
            let valid: Vec<&ExtDegree> = grid
                .iter()
                .filter(|cp| cp.leq(c))
                .filter(|cp| {
                    grid.iter()
                        .filter(|cpp| cp.leq(cpp) && cpp.leq(c))
                        .all(|cpp| iso(cp, cpp) && iso(cpp, c))
                })
                .collect();
            for cp in &valid {
                if !valid.iter().any(|other| other.leq(cp) && *other != *cp) {
                    gens.insert((*cp).clone());
                }
            }
        }
        let gens: Vec<ExtDegree> = gens.into_iter().collect();
        let lattice = LcmLattice::generate(&gens)?;

        let poset = lattice.poset();
        let dims: Vec<usize> = lattice.elements().iter().map(|d| data.dim_at(d)).collect();
        let mut edges = BTreeMap::new();
        for (i, j) in poset.covers() {
            edges.insert(
                (i, j),
                data.map_between(&lattice.elements()[i], &lattice.elements()[j]),
            );
        }
        let rep = PosetRep::new(poset, dims, edges, field)?;
        let module = GradedModule { lattice, rep };

        // admissibility check against the source data on the extended box
        let mut cursor: Vec<i64> = data.lo.iter().map(|v| v - 1).collect();
        loop {
            let c = ExtDegree::from_ints(&cursor);
            if module.unzip_dim(&c) != data.dim_at(&c) {
                return Err(ModuleError::InternalInvariant(format!(
                    "box lattice not admissible at {c}"
                )));
            }
            let mut k = 0;
            loop {
                if k == n {
                    return Ok(module);
                }
                cursor[k] += 1;
                if cursor[k] <= data.hi[k] + 1 {
                    break;
                }
                cursor[k] = data.lo[k] - 1;
                k += 1;
            }
        }
    }
}

fn cartesian(values: &[Vec<ExtInt>]) -> Vec<ExtDegree> {
    let mut out = vec![Vec::new()];
    for vs in values {
        let mut next = Vec::with_capacity(out.len() * vs.len());
        for prefix in &out {
            for v in vs {
                let mut p = prefix.clone();
                p.push(*v);
                next.push(p);
            }
        }
        out = next;
    }
    out.into_iter().map(ExtDegree).collect()
}

/// The three-lines fixture: K^2 filtered by three pairwise distinct lines,
/// each jumping 0 -> line at 0 and line -> K^2 at 1.
pub fn three_lines_module(field: FieldSpec) -> GradedModule {
    let line =
        |a: i64, b: i64| Subspace::from_rows(2, vec![vec![field.from_i64(a), field.from_i64(b)]], field);
    let full = Subspace::full(2, field);
    let data = FiltrationData {
        ambient: 2,
        field,
        steps: vec![
            vec![(0, line(1, 0)), (1, full.clone())],
            vec![(0, line(0, 1)), (1, full.clone())],
            vec![(0, line(1, 1)), (1, full)],
        ],
    };
    GradedModule::from_filtrations(&data).expect("valid fixture")
}

/// K[x,y]/(x^2, xy, y^2) as box data on [0,3]^2.
pub fn artinian_monomial_quotient(field: FieldSpec) -> GradedModule {
    let n = 2;
    let lo = vec![0i64, 0];
    let hi = vec![3i64, 3];
    let widths = 4usize;
    let dim_of =
        |x: i64, y: i64| -> usize { usize::from((x, y) == (0, 0) || (x, y) == (1, 0) || (x, y) == (0, 1)) };
    let mut dims = Vec::new();
    for x in 0..=3 {
        for y in 0..=3 {
            dims.push(dim_of(x, y));
        }
    }
    let mut maps: Vec<Vec<Option<Matrix>>> = vec![vec![None; widths * widths]; n];
    for x in 0..=3i64 {
        for y in 0..=3i64 {
            let idx = (x * 4 + y) as usize;
            if x < 3 {
                maps[0][idx] = Some(Matrix::zero(dim_of(x + 1, y), dim_of(x, y), field));
            }
            if y < 3 {
                maps[1][idx] = Some(Matrix::zero(dim_of(x, y + 1), dim_of(x, y), field));
            }
        }
    }
    // multiplication by x resp. y sends 1 to the basis monomial above
    maps[0][0] = Some(Matrix::identity(1, field));
    maps[1][0] = Some(Matrix::identity(1, field));
    GradedModule::from_box(&BoxData {
        lo,
        hi,
        field,
        dims,
        maps,
    })
    .expect("valid fixture")
}
