use std::collections::BTreeMap;

use crate::algebra::{exp_frac, exp_int, Exp, Monomial, Param};
use crate::lattice::{cartan_entry, RootIndex, ShapeConfig};
use crate::word::Generator;

use super::BirationalError;

/// How the multiplicative root variables are expressed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// Independent root variables `a_n^i`.
    Generic,
    /// `k = l = 1` with `u_n = a_n b_1/b_0`, `v_n = a_n b_0/b_1` and the
    /// constraint `prod a_n = (b_0 b_1)^N` solved for `a_N`.
    AExtended,
    /// Frozen D shape with root variables `a_0 .. a_{N+2}`; the generic
    /// ones are their squares.
    D,
}

/// Parameter data of a shape: root variables as monomials in the base
/// parameters, the `u/v` parameterization and the action of generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamModel {
    cfg: ShapeConfig,
    kind: ModelKind,
}

impl ParamModel {
    pub fn generic(cfg: ShapeConfig) -> Self {
        ParamModel { cfg, kind: ModelKind::Generic }
    }

    pub fn a_extended(n: usize) -> Result<Self, BirationalError> {
        Ok(ParamModel { cfg: ShapeConfig::a(n)?, kind: ModelKind::AExtended })
    }

    pub fn d(n: usize) -> Result<Self, BirationalError> {
        Ok(ParamModel { cfg: ShapeConfig::d(n)?, kind: ModelKind::D })
    }

    pub fn cfg(&self) -> &ShapeConfig {
        &self.cfg
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    fn nn(&self) -> i64 {
        self.cfg.n() as i64
    }

    /// Label of a retained root in the `D_{N+2}^{(1)}` diagram.
    pub fn d_label(&self, r: RootIndex) -> Option<u16> {
        let nn = self.nn() as u16;
        match (r.n, r.i) {
            (n, 0) if n < nn => Some(n),
            (1, 1) => Some(0),
            (1, -1) => Some(nn + 2),
            (n, 1) if n == nn - 1 => Some(nn),
            (n, -1) if n == nn - 1 => Some(nn + 1),
            _ => None,
        }
    }

    /// Inverse of [`ParamModel::d_label`].
    pub fn d_root(&self, label: u16) -> Option<RootIndex> {
        self.cfg.roots().into_iter().find(|r| self.d_label(*r) == Some(label))
    }

    /// `a_N` of the extended model in terms of the free parameters.
    fn a_last(&self) -> Monomial {
        let nn = self.nn();
        let mut pairs = vec![(Param::B(0), exp_int(nn)), (Param::B(1), exp_int(nn))];
        for n in 1..nn {
            pairs.push((Param::A(n as u16), exp_int(-1)));
        }
        Monomial::from_pairs(pairs)
    }

    /// The extended model's `a_n` (cyclic).
    pub fn a(&self, n: i64) -> Monomial {
        let n = self.cfg.wrap(n) as i64;
        if n == self.nn() {
            self.a_last()
        } else {
            Monomial::single(Param::A(n as u16), exp_int(1))
        }
    }

    pub fn q(&self) -> Monomial {
        Monomial::from_pairs([(Param::B(0), exp_int(1)), (Param::B(1), exp_int(1))])
    }

    /// The free parameters of the model.
    pub fn params(&self) -> Vec<Param> {
        match self.kind {
            ModelKind::Generic => self.cfg.roots().into_iter().map(|r| Param::Root(r.n, r.i)).collect(),
            ModelKind::D => {
                (0..=self.nn() as u16 + 2).map(Param::DRoot).collect()
            }
            ModelKind::AExtended => {
                let mut v: Vec<Param> = (1..self.nn() as u16).map(Param::A).collect();
                v.push(Param::B(0));
                v.push(Param::B(1));
                v
            }
        }
    }

    /// Generic root variable `a_n^i` as a monomial in the free parameters.
    pub fn root_var(&self, r: RootIndex) -> Monomial {
        match self.kind {
            ModelKind::Generic => Monomial::single(Param::Root(r.n, r.i), exp_int(1)),
            ModelKind::D => match self.d_label(r) {
                Some(l) => Monomial::single(Param::DRoot(l), exp_int(2)),
                None => Monomial::one(),
            },
            ModelKind::AExtended => {
                if r.i == 0 {
                    self.a(r.n as i64).pow(exp_int(2))
                } else {
                    Monomial::one()
                }
            }
        }
    }

    fn rv(&self, n: i64, i: i16) -> Monomial {
        let r = RootIndex::new(self.cfg.wrap(n), i);
        if self.cfg.is_valid_root(r) {
            self.root_var(r)
        } else {
            Monomial::one()
        }
    }

    /// `u_n = u_n^1`.
    pub fn u(&self, n: i64) -> Monomial {
        if self.kind == ModelKind::AExtended {
            return self.a(n).mul(&Monomial::from_pairs([
                (Param::B(1), exp_int(1)),
                (Param::B(0), exp_int(-1)),
            ]));
        }
        let (p, q, k, l) = self.pq(n);
        let kl = k + l;
        self.rv(n, 0).mul(&p).pow(exp_frac(l, kl)).div(&q.pow(exp_frac(k, kl)))
    }

    /// `v_n = v_n^{-1}`.
    pub fn v(&self, n: i64) -> Monomial {
        if self.kind == ModelKind::AExtended {
            return self.a(n).mul(&Monomial::from_pairs([
                (Param::B(0), exp_int(1)),
                (Param::B(1), exp_int(-1)),
            ]));
        }
        let (p, q, k, l) = self.pq(n);
        let kl = k + l;
        self.rv(n, 0).mul(&q).pow(exp_frac(k, kl)).div(&p.pow(exp_frac(l, kl)))
    }

    // P = prod_j (a^{-j})^{1-j/l}, Q = prod_i (a^i)^{1-i/k}
    fn pq(&self, n: i64) -> (Monomial, Monomial, i64, i64) {
        let k = self.cfg.k(n) as i64;
        let l = self.cfg.l(n) as i64;
        let mut p = Monomial::one();
        for j in 1..l {
            p = p.mul(&self.rv(n, -(j as i16)).pow(Exp::from_integer(1) - exp_frac(j, l)));
        }
        let mut q = Monomial::one();
        for i in 1..k {
            q = q.mul(&self.rv(n, i as i16).pow(Exp::from_integer(1) - exp_frac(i, k)));
        }
        (p, q, k, l)
    }

    /// `u_n^i = a_n^{i-1} u_n^{i-1}` for `i >= 2`.
    pub fn u_i(&self, n: i64, i: i16) -> Monomial {
        let mut u = self.u(n);
        for m in 2..=i {
            u = u.mul(&self.rv(n, m - 1));
        }
        u
    }

    /// `v_n^{-j} = a_n^{-j+1} v_n^{-j+1}` for `j >= 2`.
    pub fn v_j(&self, n: i64, j: i16) -> Monomial {
        let mut v = self.v(n);
        for m in 2..=j {
            v = v.mul(&self.rv(n, -(m - 1)));
        }
        v
    }

    /// `(a_n^0)^e`, written as `(u_n v_n)^e` so that it is meaningful in
    /// every model.
    pub fn a0_pow(&self, n: i64, e: Exp) -> Monomial {
        self.u(n).mul(&self.v(n)).pow(e)
    }

    /// Images of the free parameters under one generator (unlisted
    /// parameters are fixed).
    pub fn param_images(&self, g: Generator) -> Result<BTreeMap<Param, Monomial>, BirationalError> {
        let mut out = BTreeMap::new();
        match (self.kind, g) {
            (ModelKind::Generic, Generator::S(a)) | (ModelKind::D, Generator::S(a)) => {
                self.cfg.check_root(a)?;
                for b in self.cfg.roots() {
                    let c = cartan_entry(&self.cfg, a, b)?;
                    if c == 0 {
                        continue;
                    }
                    let p = self.base_param(b);
                    let img = Monomial::single(p, exp_int(1)).mul(&Monomial::single(self.base_param(a), exp_int(-c)));
                    out.insert(p, img);
                }
            }
            (ModelKind::AExtended, Generator::S(r)) => {
                if r.i != 0 {
                    return Err(BirationalError::Lattice(crate::lattice::LatticeError::IndexOutOfRange(r)));
                }
                self.cfg.check_root(r)?;
                let n = r.n as i64;
                let an = self.a(n);
                let nn = self.nn();
                for m in 1..nn {
                    let img = if m == n {
                        an.inv()
                    } else if self.cfg.wrap(m - n) == 1 || self.cfg.wrap(n - m) == 1 {
                        an.mul(&self.a(m))
                    } else {
                        continue;
                    };
                    out.insert(Param::A(m as u16), img);
                }
            }
            (ModelKind::AExtended, Generator::Pi) => {
                for m in 1..self.nn() {
                    out.insert(Param::A(m as u16), self.a(m + 1));
                }
            }
            (ModelKind::AExtended, Generator::Iota) => {
                out.insert(Param::B(0), Monomial::single(Param::B(1), exp_int(1)));
                out.insert(Param::B(1), Monomial::single(Param::B(0), exp_int(1)));
            }
            (ModelKind::AExtended, Generator::R1) | (ModelKind::AExtended, Generator::R0) => {
                let (i, j) = if g == Generator::R1 { (1u8, 0u8) } else { (0, 1) };
                out.insert(Param::B(i), Monomial::single(Param::B(i), exp_int(-1)));
                out.insert(
                    Param::B(j),
                    Monomial::from_pairs([(Param::B(i), exp_int(2)), (Param::B(j), exp_int(1))]),
                );
            }
            (_, g) => return Err(BirationalError::UnsupportedGenerator(g)),
        }
        Ok(out)
    }

    /// The free parameter attached to a root (generic and D models).
    fn base_param(&self, r: RootIndex) -> Param {
        match self.kind {
            ModelKind::D => Param::DRoot(self.d_label(r).expect("retained root")),
            _ => Param::Root(r.n, r.i),
        }
    }

    /// Whether `g` is a generator of this model.
    pub fn supports(&self, g: Generator) -> bool {
        match g {
            Generator::S(r) => self.cfg.is_valid_root(r) && (self.kind != ModelKind::AExtended || r.i == 0),
            _ => self.kind == ModelKind::AExtended,
        }
    }

    /// All generators of the model.
    pub fn generators(&self) -> Vec<Generator> {
        let mut g: Vec<Generator> = self.cfg.roots().into_iter().map(Generator::S).collect();
        if self.kind == ModelKind::AExtended {
            g.extend([Generator::Pi, Generator::Iota, Generator::R0, Generator::R1]);
        }
        g
    }
}

/// Parameter images accumulated along a word: `p -> p . w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamState {
    pub model: ParamModel,
    pub images: BTreeMap<Param, Monomial>,
}

impl ParamState {
    pub fn new(model: ParamModel) -> Self {
        ParamState { model, images: BTreeMap::new() }
    }

    pub fn image(&self, p: Param) -> Monomial {
        self.images.get(&p).cloned().unwrap_or_else(|| Monomial::single(p, exp_int(1)))
    }

    /// Transport a monomial in the free parameters.
    pub fn map(&self, m: &Monomial) -> Monomial {
        let mut out = Monomial::one();
        for (s, e) in m.entries() {
            match s.as_param() {
                Some(p) => out = out.mul(&self.image(p).pow(*e)),
                None => out = out.mul(&Monomial::single(*s, *e)),
            }
        }
        out
    }

    pub fn u(&self, n: i64) -> Monomial {
        self.map(&self.model.u(n))
    }

    pub fn v(&self, n: i64) -> Monomial {
        self.map(&self.model.v(n))
    }

    pub fn root_var(&self, r: RootIndex) -> Monomial {
        self.map(&self.model.root_var(r))
    }
}

/// Right action of a generator on the parameter state: the new image of `p`
/// is `g(p)` with the current images substituted.
pub fn act_params(state: &ParamState, g: Generator) -> Result<ParamState, BirationalError> {
    let gi = state.model.param_images(g)?;
    let mut images = BTreeMap::new();
    for p in state.model.params() {
        let base = gi.get(&p).cloned().unwrap_or_else(|| Monomial::single(p, exp_int(1)));
        let img = state.map(&base);
        if img != Monomial::single(p, exp_int(1)) {
            images.insert(p, img);
        }
    }
    Ok(ParamState { model: state.model.clone(), images })
}
