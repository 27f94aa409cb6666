use std::collections::{BTreeMap, HashSet};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{expr_equals, int, Substitution, Sym};
use crate::birational::{apply_word_with, ultradiscrete_step, FForm, Frame, ParamModel};
use crate::characters::{sigma, verify_bilinear, verify_specialization_against_tau, CharError, Mode, QContext};
use crate::lattice::{
    apply_word_lattice, cartan_entry, invariant_classes, kac_translate, kac_translate_curve, CurveClass, DivisorClass,
    LatticeError, RootVector, ShapeConfig,
};
use crate::painleve::{build_d, conserved_quantities_d, degree_growth_table, quadratic_with_period};
use crate::tau::{check_claim_transform, certify, enumerate_orbit, enumerate_orbit_with_tau, locate, OrbitElement};
use crate::word::{Generator, WeylWord};

use super::{run_check, CheckRecord};

fn basis(cfg: &ShapeConfig) -> (Vec<DivisorClass>, Vec<CurveClass>) {
    let mut ds = Vec::new();
    let mut cs = Vec::new();
    for n in 1..=cfg.n() as i64 {
        ds.push(DivisorClass::h(cfg, n));
        cs.push(CurveClass::h(cfg, n));
    }
    for (n, i) in cfg.exceptional() {
        ds.push(DivisorClass::e(cfg, n as i64, i));
        cs.push(CurveClass::e(cfg, n as i64, i));
    }
    (ds, cs)
}

fn same_on_basis(cfg: &ShapeConfig, a: &WeylWord, b: &WeylWord) -> Result<bool, LatticeError> {
    let (ds, cs) = basis(cfg);
    for d in &ds {
        if apply_word_lattice(cfg, a, d)? != apply_word_lattice(cfg, b, d)? {
            return Ok(false);
        }
    }
    for c in &cs {
        if apply_word_lattice(cfg, a, c)? != apply_word_lattice(cfg, b, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The relation words `(s_a s_a, id)` and `(s_a s_b ..., s_b s_a ...)` for
/// every pair of roots, chosen by the Cartan entry.
fn relation_words(cfg: &ShapeConfig) -> Result<Vec<(String, WeylWord, WeylWord)>, LatticeError> {
    let roots = cfg.roots();
    let mut out = Vec::new();
    for &a in &roots {
        let sa = Generator::S(a);
        out.push((format!("{a}^2"), WeylWord(vec![sa, sa]), WeylWord::empty()));
        for &b in roots.iter().filter(|b| **b > a) {
            let sb = Generator::S(b);
            let (l, r) = match cartan_entry(cfg, a, b)? {
                0 => (vec![sa, sb], vec![sb, sa]),
                -1 => (vec![sa, sb, sa], vec![sb, sa, sb]),
                -2 => (vec![sa, sb, sa, sb], vec![sb, sa, sb, sa]),
                // no finite braid relation; s_a s_b has infinite order
                _ => continue,
            };
            out.push((format!("{a} {b}"), WeylWord(l), WeylWord(r)));
        }
    }
    Ok(out)
}

fn random_word<R: Rng>(cfg: &ShapeConfig, max_len: usize, rng: &mut R) -> WeylWord {
    let roots = cfg.roots();
    let len = rng.gen_range(0..=max_len);
    WeylWord((0..len).map(|_| Generator::S(roots[rng.gen_range(0..roots.len())])).collect())
}

/// Squares, braid and commutation relations on the basis classes, and
/// invariance of `δ`, `δ^∨` and of the pairing under random words.
pub fn lattice_relations(cfg: &ShapeConfig, n_words: usize, max_len: usize, seed: u64) -> Vec<CheckRecord> {
    let shape = cfg.describe();
    let mut out = Vec::new();
    match relation_words(cfg) {
        Ok(ws) => {
            for (name, a, b) in ws {
                out.push(run_check("lattice.relation", format!("{shape} {name}"), || {
                    same_on_basis(cfg, &a, &b).map(|ok| (ok, None))
                }));
            }
        }
        Err(e) => out.push(run_check("lattice.relation", shape.clone(), || Err::<(bool, Option<String>), _>(e))),
    }
    let inv = invariant_classes(cfg);
    let (ds, cs) = basis(cfg);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..n_words {
        let w = random_word(cfg, max_len, &mut rng);
        out.push(run_check("lattice.invariance", format!("{shape} word{k} [{w}]"), || {
            let mut ok = apply_word_lattice(cfg, &w, &inv.delta)? == inv.delta
                && apply_word_lattice(cfg, &w, &inv.delta_check)? == inv.delta_check;
            let wd = ds.iter().map(|d| apply_word_lattice(cfg, &w, d)).collect::<Result<Vec<_>, _>>()?;
            let wc = cs.iter().map(|c| apply_word_lattice(cfg, &w, c)).collect::<Result<Vec<_>, _>>()?;
            for (d, x) in ds.iter().zip(&wd) {
                for (c, y) in cs.iter().zip(&wc) {
                    ok &= d.pair(c) == x.pair(y);
                }
            }
            Ok::<_, LatticeError>((ok, None))
        }));
    }
    out
}

fn same_images(model: &ParamModel, frame: Frame, form: FForm, a: &WeylWord, b: &WeylWord) -> Result<bool, String> {
    let (s1, e1) = apply_word_with(model, frame, form, a).map_err(|e| e.to_string())?;
    let (s2, e2) = apply_word_with(model, frame, form, b).map_err(|e| e.to_string())?;
    Ok(s1.images == s2.images && e1.iter().all(|(v, e)| e2.get(v).is_some_and(|x| expr_equals(e, x))))
}

/// The lattice relation words checked on the birational images in each
/// `(frame, form)`.
pub fn birational_relations(model: &ParamModel, frames: &[(Frame, FForm)]) -> Vec<CheckRecord> {
    let cfg = model.cfg();
    let shape = cfg.describe();
    let ws = match relation_words(cfg) {
        Ok(ws) => ws,
        Err(e) => return vec![run_check("birational.relation", shape, || Err::<(bool, Option<String>), _>(e))],
    };
    let jobs: Vec<_> = frames.iter().flat_map(|f| ws.iter().map(move |w| (*f, w))).collect();
    jobs.par_iter()
        .map(|((frame, form), (name, a, b))| {
            run_check("birational.relation", format!("{shape} {frame:?}/{form:?} {name}"), || {
                same_images(model, *frame, *form, a, b).map(|ok| (ok, None))
            })
        })
        .collect()
}

fn random_point<R: Rng>(model: &ParamModel, frame: Frame, rng: &mut R) -> BTreeMap<Sym, BigRational> {
    let mut p = BTreeMap::new();
    for v in frame.variables(model.cfg()) {
        p.insert(Sym::Var(v), int(rng.gen_range(-20..=20)));
    }
    for q in model.params() {
        p.insert(Sym::Param(q), int(rng.gen_range(-20..=20)));
    }
    p
}

fn run_min_plus(
    model: &ParamModel,
    frame: Frame,
    w: &WeylWord,
    p: &BTreeMap<Sym, BigRational>,
) -> Result<BTreeMap<Sym, BigRational>, crate::birational::BirationalError> {
    let mut x = p.clone();
    for g in w.letters().iter().rev() {
        x = ultradiscrete_step(model, frame, FForm::Plain, *g, &x)?;
    }
    Ok(x)
}

/// The relation words on the min-plus maps, pointwise at random integer
/// points.
pub fn ultradiscrete_relations(model: &ParamModel, frame: Frame, points: usize, seed: u64) -> Vec<CheckRecord> {
    let cfg = model.cfg();
    let shape = cfg.describe();
    let ws = match relation_words(cfg) {
        Ok(ws) => ws,
        Err(e) => return vec![run_check("ultradiscrete.relation", shape, || Err::<(bool, Option<String>), _>(e))],
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts: Vec<_> = (0..points).map(|_| random_point(model, frame, &mut rng)).collect();
    ws.iter()
        .map(|(name, a, b)| {
            run_check("ultradiscrete.relation", format!("{shape} {frame:?} {name}"), || {
                for p in &pts {
                    if run_min_plus(model, frame, a, p)? != run_min_plus(model, frame, b, p)? {
                        let at: Vec<String> = p.iter().map(|(s, v)| format!("{s}={v}")).collect();
                        return Ok((false, Some(at.join(" "))));
                    }
                }
                Ok::<_, crate::birational::BirationalError>((true, None))
            })
        })
        .collect()
}

/// `t_α t_β = t_{α+β}` on the basis for all pairs of simple roots, and
/// constant second differences of `<t_α^n(H_i), h_j>` for `n ≤ n_max`.
pub fn kac_checks(cfg: &ShapeConfig, n_max: usize) -> Vec<CheckRecord> {
    let shape = cfg.describe();
    let roots = cfg.roots();
    let (ds, cs) = basis(cfg);
    let mut out = Vec::new();
    for &a in &roots {
        for &b in &roots {
            let (ra, rb) = (RootVector::simple(a), RootVector::simple(b));
            out.push(run_check("kac.additivity", format!("{shape} {a}+{b}"), || {
                let ab = ra.add(&rb);
                let mut ok = true;
                for d in &ds {
                    ok &= kac_translate(cfg, &ra, &kac_translate(cfg, &rb, d)?)? == kac_translate(cfg, &ab, d)?;
                }
                for c in &cs {
                    ok &= kac_translate_curve(cfg, &ra, &kac_translate_curve(cfg, &rb, c)?)?
                        == kac_translate_curve(cfg, &ab, c)?;
                }
                Ok::<_, LatticeError>((ok, None))
            }));
        }
    }
    let nn = cfg.n() as i64;
    for &a in &roots {
        out.push(run_check("kac.quadratic", format!("{shape} {a}"), || {
            let ra = RootVector::simple(a);
            for i in 1..=nn {
                for j in 1..=nn {
                    let xs = (0..=n_max as i64)
                        .map(|n| Ok(kac_translate(cfg, &ra.scale(n), &DivisorClass::h(cfg, i))?.pair(&CurveClass::h(cfg, j))))
                        .collect::<Result<Vec<i64>, LatticeError>>()?;
                    let d2 = crate::painleve::second_differences(&xs);
                    if d2.windows(2).any(|w| w[0] != w[1]) {
                        return Ok((false, Some(format!("H{i} h{j}: {xs:?}"))));
                    }
                }
            }
            Ok::<_, LatticeError>((true, None))
        }));
    }
    out
}

/// Laurent, `ζ`-expressibility, degree, multiplicity and normalization
/// checks for every orbit element of witness length at most `max_len`.
pub fn certificates(model: &ParamModel, max_len: usize) -> Vec<CheckRecord> {
    let shape = model.cfg().describe();
    let entries = match enumerate_orbit_with_tau(model, max_len) {
        Ok(e) => e,
        Err(e) => return vec![run_check("tau.certificate", shape, || Err::<(bool, Option<String>), _>(e))],
    };
    entries
        .par_iter()
        .map(|e| {
            let (n, i) = e.element.base;
            let inst = format!("{shape} [{}] E{n}.{i}", e.element.witness);
            run_check("tau.certificate", inst, || {
                let c = certify(model, &e.element, &e.tau);
                Ok::<_, String>((c.passed(), (!c.passed()).then(|| format!("{c:?}"))))
            })
        })
        .collect()
}

/// `E_n^{±1}`, `H_n - E_n^{±1}` and `H_n + H_{n+1} - E_n^1 - E_n^{-1} - E_{n+1}^{-1}`
/// on an `A` shape, followed by their images under one `s_m^0`.
pub fn claim_classes(cfg: &ShapeConfig) -> Result<Vec<OrbitElement>, LatticeError> {
    let nn = cfg.n() as i64;
    let mut listed = Vec::new();
    for n in 1..=nn {
        listed.push(DivisorClass::e(cfg, n, 1));
        listed.push(DivisorClass::e(cfg, n, -1));
        for i in [1, -1] {
            let mut d = DivisorClass::h(cfg, n);
            d.add_e(cfg, n, i, -1);
            listed.push(d);
        }
        let mut d = DivisorClass::h(cfg, n);
        d.add_h(cfg, n % nn + 1, 1);
        d.add_e(cfg, n, 1, -1);
        d.add_e(cfg, n, -1, -1);
        d.add_e(cfg, n % nn + 1, -1, -1);
        listed.push(d);
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut base = Vec::new();
    for d in listed {
        if let Some(el) = locate(cfg, &d, 4)? {
            if seen.insert(el.divisor.clone()) {
                base.push(el);
            }
        }
    }
    for el in &base {
        out.push(el.clone());
    }
    for el in &base {
        for m in 1..=cfg.n() as u16 {
            let moved = el.act(cfg, Generator::s(m, 0))?;
            if seen.insert(moved.divisor.clone()) {
                out.push(moved);
            }
        }
    }
    Ok(out)
}

/// The transformation rule of `φ_Λ` under every `s_m^0`, for the classes
/// of [`claim_classes`].
pub fn claim_checks(model: &ParamModel) -> Vec<CheckRecord> {
    let cfg = model.cfg();
    let shape = cfg.describe();
    let els = match claim_classes(cfg) {
        Ok(e) => e,
        Err(e) => return vec![run_check("tau.claim", shape, || Err::<(bool, Option<String>), _>(e))],
    };
    let jobs: Vec<(OrbitElement, u16)> =
        els.iter().flat_map(|el| (1..=cfg.n() as u16).map(move |m| (el.clone(), m))).collect();
    jobs.par_iter()
        .map(|(el, m)| {
            let inst = format!("{shape} {} s{m}.0", el.divisor.to_string_with(cfg, true));
            run_check("tau.claim", inst, || check_claim_transform(model, el, Generator::s(*m, 0)).map(|ok| (ok, None)))
        })
        .collect()
}

/// For every pair `(i, j)`: the measured degrees of `w^k(f_i)` in `f_j`
/// stay within the lattice bound and grow quadratically up to a
/// `period`-periodic correction.
pub fn degree_growth_checks(
    model: &ParamModel,
    word: &WeylWord,
    n_iters: usize,
    period: usize,
    seed: u64,
) -> Vec<CheckRecord> {
    let shape = model.cfg().describe();
    let nn = model.cfg().n() as u16;
    let pairs: Vec<(u16, u16)> = (1..=nn).flat_map(|i| (1..=nn).map(move |j| (i, j))).collect();
    pairs
        .par_iter()
        .map(|&(i, j)| {
            run_check("painleve.degree", format!("{shape} [{word}] f{i} in f{j}"), || {
                let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((i as u64) << 16 | j as u64));
                let t = degree_growth_table(model, word, n_iters, i, j, 2, &mut rng)?;
                let d: Vec<i64> = t.degrees.iter().map(|&x| x as i64).collect();
                let bounded = d.iter().zip(&t.bound).all(|(a, b)| a <= b);
                let ok = bounded && quadratic_with_period(&d, period);
                Ok::<_, crate::painleve::PainleveError>((ok, Some(format!("degrees {d:?} bound {:?}", t.bound))))
            })
        })
        .collect()
}

/// The products of the `f` variables that the D-type generators fix.
pub fn conserved_checks(n: usize) -> Vec<CheckRecord> {
    let (model, gens) = match build_d(n) {
        Ok(x) => x,
        Err(e) => return vec![run_check("painleve.conserved", format!("N={n}"), || Err::<(bool, Option<String>), _>(e))],
    };
    let qs = match conserved_quantities_d(n) {
        Ok(x) => x,
        Err(e) => return vec![run_check("painleve.conserved", format!("N={n}"), || Err::<(bool, Option<String>), _>(e))],
    };
    let mut out = Vec::new();
    for (k, q) in qs.iter().enumerate() {
        for (label, g) in &gens {
            out.push(run_check("painleve.conserved", format!("N={n} I{} s{label}", k + 1), || {
                let (_, e) = apply_word_with(&model, Frame::F, FForm::Plain, &WeylWord(vec![*g]))?;
                let mut s = Substitution::new();
                for (v, x) in e {
                    s.bind_var(v, x);
                }
                let moved = s.apply(q)?;
                Ok::<_, crate::painleve::PainleveError>((expr_equals(&moved, q), None))
            }));
        }
    }
    out
}

/// A grid of the bilinear relation: `ν ∈ [-nu_radius, nu_radius]^N`,
/// `|κ| ≤ kappa_radius`, all `i`.
#[derive(Clone, Copy, Debug)]
pub struct GridSpec {
    pub n: usize,
    pub mode: Mode,
    pub nu_radius: i64,
    pub kappa_radius: i64,
    pub tolerance: f64,
}

fn nu_grid(n: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<i64>| (-r..=r).map(move |a| [v.as_slice(), &[a]].concat())).collect();
    }
    out
}

fn residual_record(
    check: &str,
    inst: String,
    tolerance: f64,
    f: impl FnOnce() -> Result<crate::characters::Real, CharError>,
) -> CheckRecord {
    run_check(check, inst, || {
        let r = f()?.to_f64();
        Ok::<_, CharError>((r < tolerance, Some(format!("{r:e}"))))
    })
}

pub fn char_grid(ctx: &QContext, grid: GridSpec) -> Vec<CheckRecord> {
    let tag = format!("N={} {:?}", grid.n, grid.mode);
    nu_grid(grid.n, grid.nu_radius)
        .par_iter()
        .map(|nu| {
                let mut out = Vec::new();
                for kappa in -grid.kappa_radius..=grid.kappa_radius {
                    for i in 1..=grid.n {
                        let inst = format!("{tag} nu={nu:?} kappa={kappa} i={i}");
                        out.push(residual_record("char.bilinear", inst, grid.tolerance, || {
                            verify_bilinear(ctx, nu, i, kappa, grid.mode)
                        }));
                    }
                }
                out
        })
        .flatten()
        .collect()
}

/// Residual at truncation `t` and `2t`; passes when doubling shrinks it
/// or both already sit at the working precision.
#[allow(clippy::too_many_arguments)]
pub fn truncation_check(
    q: (i64, i64),
    b0: (i64, i64),
    c: (i64, i64),
    precision: usize,
    t: usize,
    nu: &[i64],
    i: usize,
    kappa: i64,
    mode: Mode,
) -> CheckRecord {
    let inst = format!("{mode:?} nu={nu:?} kappa={kappa} i={i} T={t}");
    run_check("char.truncation", inst, || {
        let r = |t| -> Result<f64, CharError> {
            let ctx = QContext::with_truncation(q, b0, c, t, precision)?;
            Ok(verify_bilinear(&ctx, nu, i, kappa, mode)?.to_f64())
        };
        let (a, b) = (r(t)?, r(2 * t)?);
        let floor = 2f64.powi(16 - precision as i32);
        Ok::<_, CharError>((b < a || (a <= floor && b <= floor), Some(format!("{a:e} -> {b:e}"))))
    })
}

/// The closed form against the τ value of every orbit element of witness
/// length at most `max_len` on the extended `A` model.
pub fn specialization_checks(ctx: &QContext, model: &ParamModel, max_len: usize, tolerance: f64) -> Vec<CheckRecord> {
    let shape = model.cfg().describe();
    let els = match enumerate_orbit(model.cfg(), max_len) {
        Ok(e) => e,
        Err(e) => return vec![run_check("char.specialization", shape, || Err::<(bool, Option<String>), _>(e))],
    };
    // warm the σ cache in a fixed order so results do not depend on threads
    let _ = sigma(ctx, &vec![0; model.cfg().n()], 0, Mode::Schur);
    els.iter()
        .map(|el| {
            let (n, i) = el.base;
            residual_record("char.specialization", format!("{shape} [{}] E{n}.{i}", el.witness), tolerance, || {
                verify_specialization_against_tau(ctx, model, el)
            })
        })
        .collect()
}
