//! The translation step on three nodes: degree growth and an exact orbit.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use weyltrop::algebra::Var;
use weyltrop::birational::ParamModel;
use weyltrop::painleve::{degree_growth_table, iterate_rational, qpa_step, qpa_word};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let model = ParamModel::a_extended(3)?;
    let (_, step) = qpa_step(&model)?;
    for (v, e) in &step {
        println!("{v} -> {e}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let t = degree_growth_table(&model, &qpa_word(), 8, 1, 1, 2, &mut rng)?;
    println!("deg f1 in f1: {:?}", t.degrees);
    println!("bound:        {:?}", t.bound);
    println!("second diffs: {:?}", t.second_differences);

    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    let roots: HashMap<_, _> = model.params().into_iter().zip([r(2, 3), r(5, 7), r(3, 2), r(7, 5)].into_iter().cycle()).collect();
    let start: BTreeMap<Var, BigRational> = step.keys().zip([r(1, 2), r(3, 1), r(-2, 5)]).map(|(v, x)| (*v, x)).collect();
    for (n, pt) in iterate_rational(&model, &qpa_word(), 2, &roots, &start)?.iter().enumerate() {
        let row: Vec<String> = pt.iter().map(|(v, x)| format!("{v}={x}")).collect();
        println!("n={n}: {}", row.join(" "));
    }
    Ok(())
}
