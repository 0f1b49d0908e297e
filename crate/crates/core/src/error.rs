use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LinAlgError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not contained in the prospective complement target")]
    NotContained,
    #[error("cannot parse rational `{0}`")]
    BadRational(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("degree lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("+inf coordinate not allowed in an lcm lattice element")]
    PlusInfinity,
    #[error("-inf coordinate not allowed in a gcd lattice element")]
    MinusInfinity,
    #[error("element not in the poset")]
    NotAnElement,
    #[error("relation is not antisymmetric")]
    NotAntisymmetric,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("representation is not functorial")]
    NotFunctorial,
    #[error("edge map at ({0}, {1}) has wrong shape")]
    BadEdgeShape(usize, usize),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error("filtration steps are not strictly nested")]
    NotNested(String),
    #[error("monomial generator has a negative coordinate")]
    NegativeGenerator,
    #[error("module is not finitely generated (lattice has a -inf coordinate)")]
    NotFinitelyGenerated,
    #[error("exactness box does not contain all term degrees")]
    BoxTooSmall,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ToricError {
    #[error("rays are linearly dependent")]
    DependentRays,
    #[error("ray {0} is not primitive")]
    NotPrimitive(usize),
    #[error("vector length {0} does not match cone dimension {1}")]
    LengthMismatch(usize, usize),
    #[error("cone is smooth: no nontrivial divisor classes")]
    SmoothCone,
    #[error("cone dimension must be at least 3 (surface modules split)")]
    DimensionTooSmall,
    #[error("shift data must satisfy low < high componentwise")]
    BadShifts,
    #[error(transparent)]
    Module(#[from] ModuleError),
}
