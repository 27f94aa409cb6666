use std::collections::{BTreeMap, HashMap};
use std::io::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::Var;
use crate::birational::{FForm, Frame, ParamModel};
use crate::characters::{Mode, QContext};
use crate::painleve::{degree_growth_table, iterate_rational, qpa_step, qpa_word};
use crate::tau::{certify, enumerate_orbit_with_tau, laurent_certificate, phi_from_laurent, tau_of, OrbitElement};
use crate::verify::{self, run_check, skipped, GridSpec, Report};
use crate::word::WeylWord;

use super::{runtime, CharMode, Cli, CliError, Command, RunConfig};

pub(super) fn dispatch(cli: &Cli) -> Result<bool, CliError> {
    let run = &cli.run;
    run.check_b1()?;
    match &cli.command {
        Command::VerifyRelations { words, word_len, points } => verify_relations(run, *words, *word_len, *points),
        Command::Tau { word, base } => tau(run, word, base),
        Command::Orbit { with_tau } => orbit(run, *with_tau),
        Command::DegreeGrowth { word, var } => degree_growth(run, word.as_deref(), *var),
        Command::QpStep => qp_step(run),
        Command::CharCheck { mode, nu_radius, kappa_radius, specialization } => {
            char_check(run, *mode, *nu_radius, *kappa_radius, *specialization)
        }
    }
}

fn finish(run: &RunConfig, report: &Report) -> Result<bool, CliError> {
    let mut w = run.writer()?;
    report.write_jsonl(&mut w, run.timings)?;
    w.flush()?;
    eprintln!(
        "{} pass, {} fail, {} skip",
        report.count(verify::Status::Pass),
        report.count(verify::Status::Fail),
        report.count(verify::Status::Skip)
    );
    Ok(report.all_passed())
}

fn parse_word(s: &str) -> Result<WeylWord, CliError> {
    s.parse().map_err(|e: crate::word::ParseWordError| CliError::Config(e.to_string()))
}

fn check_roots(cfg: &crate::lattice::ShapeConfig, w: &WeylWord) -> Result<(), CliError> {
    for r in w.letters().iter().filter_map(|g| g.root()) {
        cfg.check_root(r).map_err(|e| CliError::Config(e.to_string()))?;
    }
    Ok(())
}

fn verify_relations(run: &RunConfig, words: usize, word_len: usize, points: usize) -> Result<bool, CliError> {
    let shape = run.shape()?;
    let model = run.model(&shape)?;
    let cfg = &shape.cfg;
    let mut report = Report::new();
    report.extend(verify::lattice_relations(cfg, words, word_len, run.seed));
    let omega = (1..=cfg.n() as i64).all(|n| cfg.assumption_holds(n));
    let mut frames = vec![(Frame::F, FForm::Plain)];
    if omega {
        frames.push((Frame::X, FForm::Omega));
        frames.push((Frame::Tau, FForm::Omega));
    } else {
        for f in ["X", "Tau"] {
            report.records.push(skipped("birational.relation", format!("{} {f}", cfg.describe()), "k_n l_n assumption fails"));
        }
    }
    report.extend(verify::birational_relations(&model, &frames));
    report.extend(verify::ultradiscrete_relations(&model, Frame::F, points, run.seed));
    if omega {
        report.extend(verify::ultradiscrete_relations(&model, Frame::Tau, points, run.seed));
    }
    finish(run, &report)
}

fn parse_base(s: &str) -> Result<(u16, i16), CliError> {
    let bad = || CliError::Config(format!("base `{s}` is not n.i"));
    let (n, i) = s.split_once('.').ok_or_else(bad)?;
    Ok((n.parse().map_err(|_| bad())?, i.parse().map_err(|_| bad())?))
}

fn tau(run: &RunConfig, word: &str, base: &str) -> Result<bool, CliError> {
    let shape = run.shape()?;
    let model = run.model(&shape)?;
    let cfg = &shape.cfg;
    let w = parse_word(word)?;
    check_roots(cfg, &w)?;
    let base = parse_base(base)?;
    if !cfg.exceptional().contains(&base) {
        return Err(CliError::Config(format!("E{}.{} is not an exceptional class of this shape", base.0, base.1)));
    }
    let el = OrbitElement::from_word(cfg, w, base).map_err(runtime)?;
    let tv = tau_of(&model, &el).map_err(runtime)?;
    let cert = certify(&model, &el, &tv.expr);
    let (_, laurent) = laurent_certificate(&tv);
    let phi = laurent.as_ref().and_then(|l| phi_from_laurent(&model, &el.divisor, l).ok());
    let record = json!({
        "word": el.witness.to_string(),
        "base": format!("E{}.{}", base.0, base.1),
        "divisor": el.divisor.to_string_with(cfg, true),
        "tau": tv.expr.to_string(),
        "laurent": laurent.map(|l| l.to_string()),
        "mu": phi.as_ref().map(|p| json!(p.mu)),
        "degree": el.divisor.degree(),
        "phi": phi.as_ref().map(|p| p.poly.to_string()),
        "certificate": cert,
        "passed": cert.passed(),
    });
    let mut out = run.writer()?;
    writeln!(out, "{record}")?;
    out.flush()?;
    Ok(cert.passed())
}

fn orbit(run: &RunConfig, with_tau: bool) -> Result<bool, CliError> {
    let shape = run.shape()?;
    let model = run.model(&shape)?;
    let cfg = &shape.cfg;
    let entries = enumerate_orbit_with_tau(&model, run.max_word_len).map_err(runtime)?;
    let lines: Vec<(bool, Value)> = entries
        .par_iter()
        .map(|e| {
            let c = certify(&model, &e.element, &e.tau);
            let mut v = json!({
                "divisor": e.element.divisor.to_string_with(cfg, true),
                "witness": e.element.witness.to_string(),
                "base": format!("E{}.{}", e.element.base.0, e.element.base.1),
                "certificate": c,
                "passed": c.passed(),
            });
            if with_tau {
                v["tau"] = json!(e.tau.to_string());
            }
            (c.passed(), v)
        })
        .collect();
    let mut out = run.writer()?;
    for (_, v) in &lines {
        writeln!(out, "{v}")?;
    }
    out.flush()?;
    Ok(lines.iter().all(|(ok, _)| *ok))
}

fn painleve_model(run: &RunConfig) -> Result<(ParamModel, bool), CliError> {
    let shape = run.shape()?;
    let model = if shape.d_type {
        ParamModel::d(shape.cfg.n())
    } else if shape.cfg.is_a_type() {
        ParamModel::a_extended(shape.cfg.n())
    } else {
        return Err(CliError::Config("the preset must be affine (aN or dN)".into()));
    };
    Ok((model.map_err(|e| CliError::Config(e.to_string()))?, shape.d_type))
}

fn degree_growth(run: &RunConfig, word: Option<&str>, var: u16) -> Result<bool, CliError> {
    let (model, d_type) = painleve_model(run)?;
    let nn = model.cfg().n() as u16;
    if var == 0 || var > nn {
        return Err(CliError::Config(format!("--var must lie in 1..={nn}")));
    }
    let word = match (word, d_type) {
        (Some(w), _) => {
            let w = parse_word(w)?;
            check_roots(model.cfg(), &w)?;
            w
        }
        (None, false) => qpa_word(),
        (None, true) => return Err(CliError::Config("dN presets need --word".into())),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(run.seed);
    let tables = (1..=nn)
        .map(|i| degree_growth_table(&model, &word, run.iters, i, var, 2, &mut rng))
        .collect::<Result<Vec<_>, _>>()
        .map_err(runtime)?;
    let mut w = csv::Writer::from_writer(run.writer()?);
    let mut header = vec!["n".to_string()];
    for prefix in ["deg", "bound", "d2"] {
        header.extend((1..=nn).map(|i| format!("{prefix}_f{i}")));
    }
    w.write_record(&header).map_err(runtime)?;
    for n in 0..=run.iters {
        let mut row = vec![n.to_string()];
        row.extend(tables.iter().map(|t| t.degrees[n].to_string()));
        row.extend(tables.iter().map(|t| t.bound[n].to_string()));
        row.extend(tables.iter().map(|t| {
            n.checked_sub(2).and_then(|k| t.second_differences.get(k)).map(|d| d.to_string()).unwrap_or_default()
        }));
        w.write_record(&row).map_err(runtime)?;
    }
    w.flush()?;
    Ok(tables.iter().all(|t| t.degrees.iter().zip(&t.bound).all(|(d, b)| *d as i64 <= *b)))
}

fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(1..=9i64)), BigInt::from(rng.gen_range(1..=9i64)))
}

fn qp_step(run: &RunConfig) -> Result<bool, CliError> {
    let (model, d_type) = painleve_model(run)?;
    if d_type {
        return Err(CliError::Config("qp-step needs an aN preset".into()));
    }
    let (state, images) = qpa_step(&model).map_err(runtime)?;
    let params: BTreeMap<String, String> =
        model.params().into_iter().map(|p| (p.to_string(), state.image(p).to_string())).collect();
    let f: BTreeMap<String, String> = images.iter().map(|(v, e)| (v.to_string(), e.to_string())).collect();
    let mut out = run.writer()?;
    writeln!(out, "{}", json!({ "word": qpa_word().to_string(), "params": params, "f": f }))?;
    let mut rng = ChaCha8Rng::seed_from_u64(run.seed);
    let roots: HashMap<_, _> = model.params().into_iter().map(|p| (p, random_rational(&mut rng))).collect();
    let start: BTreeMap<Var, BigRational> = images.keys().map(|v| (*v, random_rational(&mut rng))).collect();
    let orbit = iterate_rational(&model, &qpa_word(), run.iters, &roots, &start).map_err(runtime)?;
    for (n, pt) in orbit.iter().enumerate() {
        let mut v = json!({ "n": n });
        for (var, x) in pt {
            v[var.to_string()] = json!(x.to_string());
        }
        writeln!(out, "{v}")?;
    }
    out.flush()?;
    Ok(true)
}

fn char_check(run: &RunConfig, mode: CharMode, nu_radius: i64, kappa_radius: i64, spec_check: bool) -> Result<bool, CliError> {
    let shape = run.shape()?;
    let n = shape.cfg.n();
    let mode = match mode {
        CharMode::Schur => Mode::Schur,
        CharMode::Uc => Mode::Uc,
    };
    if mode == Mode::Uc && (n % 2 == 1 || n < 4) {
        return Err(CliError::Config(format!("uc mode needs N = 2g + 2 >= 4, got {n}")));
    }
    let grid = GridSpec { n, mode, nu_radius, kappa_radius, tolerance: run.tolerance };
    let mut report = Report::new();
    match QContext::new(run.q, run.b0, run.c, run.tolerance, run.precision) {
        Ok(ctx) => {
            report.extend(verify::char_grid(&ctx, grid));
            let mut nu = vec![0; n];
            nu[0] = 1;
            report.records.push(verify::truncation_check(
                run.q,
                run.b0,
                run.c,
                run.precision,
                ctx.truncation / 2,
                &nu,
                1,
                1,
                mode,
            ));
            if spec_check && mode == Mode::Schur {
                let model = ParamModel::a_extended(n).map_err(|e| CliError::Config(e.to_string()))?;
                report.extend(verify::specialization_checks(&ctx, &model, run.max_word_len, 1e-12_f64.max(run.tolerance)));
            }
        }
        // every cell fails with the same reason
        Err(e) => {
            for nu in grid_cells(n, nu_radius) {
                for kappa in -kappa_radius..=kappa_radius {
                    for i in 1..=n {
                        let inst = format!("N={n} {mode:?} nu={nu:?} kappa={kappa} i={i}");
                        report.records.push(run_check("char.bilinear", inst, || Err::<(bool, Option<String>), _>(&e)));
                    }
                }
            }
        }
    }
    finish(run, &report)
}

fn grid_cells(n: usize, r: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<i64>| (-r..=r).map(move |a| [v.as_slice(), &[a]].concat())).collect();
    }
    out
}
