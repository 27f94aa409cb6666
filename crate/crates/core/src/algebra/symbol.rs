use std::fmt;

/// Dynamical variables: the indeterminates the Weyl group acts on.
///
/// Indices follow the cyclic labelling `1..=N`; exceptional indices on
/// `Tau` are signed (`i > 0` for `E_n^i`, `i < 0` for `E_n^{-j}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Tau(u16, i16),
    F(u16),
    X(u16),
    Zeta0(u16),
    ZetaInf(u16),
    /// Scratch variables for tests and ad-hoc computations.
    Free(u16),
}

/// Parameters living in the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    /// Multiplicative root variable `a_n^i` of a generic shape.
    Root(u16, i16),
    /// Root variable `a_n` of the extended `A_{N-1}^{(1)}` model.
    A(u16),
    /// `b_0` or `b_1`.
    B(u8),
    Q,
    C,
    /// Root variable `a_i` of the `D_{N+2}^{(1)}` labelling, `0 <= i <= N+2`.
    DRoot(u16),
    Free(u16),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sym {
    Var(Var),
    Param(Param),
}

impl Sym {
    pub fn is_param(&self) -> bool {
        matches!(self, Sym::Param(_))
    }
    pub fn as_var(&self) -> Option<Var> {
        match self {
            Sym::Var(v) => Some(*v),
            Sym::Param(_) => None,
        }
    }
    pub fn as_param(&self) -> Option<Param> {
        match self {
            Sym::Param(p) => Some(*p),
            Sym::Var(_) => None,
        }
    }
}

impl From<Var> for Sym {
    fn from(v: Var) -> Self {
        Sym::Var(v)
    }
}

impl From<Param> for Sym {
    fn from(p: Param) -> Self {
        Sym::Param(p)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Tau(n, i) => write!(f, "tau[{n},{i}]"),
            Var::F(n) => write!(f, "f[{n}]"),
            Var::X(n) => write!(f, "x[{n}]"),
            Var::Zeta0(n) => write!(f, "z0[{n}]"),
            Var::ZetaInf(n) => write!(f, "zinf[{n}]"),
            Var::Free(n) => write!(f, "v{n}"),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Root(n, i) => write!(f, "a[{n},{i}]"),
            Param::A(n) => write!(f, "a[{n}]"),
            Param::B(i) => write!(f, "b{i}"),
            Param::Q => write!(f, "q"),
            Param::C => write!(f, "c"),
            Param::DRoot(i) => write!(f, "d[{i}]"),
            Param::Free(n) => write!(f, "p{n}"),
        }
    }
}

impl fmt::Display for Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sym::Var(v) => v.fmt(f),
            Sym::Param(p) => p.fmt(f),
        }
    }
}
