//! Min-plus reflections on integer points.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use weyltrop::algebra::Sym;
use weyltrop::birational::{ultradiscrete_step, FForm, Frame, ParamModel};
use weyltrop::lattice::ShapeConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let model = ParamModel::generic(ShapeConfig::a(3)?);
    let mut point: BTreeMap<Sym, BigRational> = BTreeMap::new();
    for (k, v) in Frame::F.variables(model.cfg()).into_iter().enumerate() {
        point.insert(Sym::Var(v), BigRational::from_integer(BigInt::from(3 * k as i64 - 2)));
    }
    for (k, p) in model.params().into_iter().enumerate() {
        point.insert(Sym::Param(p), BigRational::from_integer(BigInt::from(k as i64 % 3 - 1)));
    }
    let show = |p: &BTreeMap<Sym, BigRational>| p.iter().map(|(s, x)| format!("{s}={x}")).collect::<Vec<_>>().join(" ");
    println!("start   {}", show(&point));
    for g in model.generators() {
        let moved = ultradiscrete_step(&model, Frame::F, FForm::Plain, g, &point)?;
        let back = ultradiscrete_step(&model, Frame::F, FForm::Plain, g, &moved)?;
        assert_eq!(back, point);
        println!("{g:<7} {}", show(&moved));
    }
    Ok(())
}
