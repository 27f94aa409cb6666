//! τ values on a short stretch of the orbit, with their certificates and Φ.

use weyltrop::birational::ParamModel;
use weyltrop::lattice::ShapeConfig;
use weyltrop::tau::{certify, enumerate_orbit_with_tau, phi_from_tau};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let model = ParamModel::generic(ShapeConfig::a(3)?);
    let cfg = model.cfg();
    let entries = enumerate_orbit_with_tau(&model, 2)?;
    println!("{} classes reached with words of length <= 2", entries.len());
    for e in entries.iter().filter(|e| !e.element.witness.is_empty()).take(6) {
        let cert = certify(&model, &e.element, &e.tau);
        let phi = phi_from_tau(&model, &e.element)?;
        println!(
            "{:<14} via {:<10} certified={}  Phi = {}",
            e.element.divisor.to_string_with(cfg, true),
            e.element.witness.to_string(),
            cert.passed(),
            phi.poly
        );
    }
    Ok(())
}
