//! Simple reflections on the Picard lattice of the A_2 shape.

use weyltrop::lattice::{apply_word_lattice, coroot, invariant_classes, pairing, root, DivisorClass, RootIndex, ShapeConfig};
use weyltrop::word::WeylWord;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = ShapeConfig::a(3)?;
    for r in cfg.roots() {
        let a = root(&cfg, r)?;
        let c = coroot(&cfg, r)?;
        println!("{r}: root {}  <root, coroot> = {}", a.to_string_with(&cfg, true), pairing(&a, &c)?);
    }
    let w: WeylWord = "s1 s2 s3 s1".parse()?;
    let e = DivisorClass::e(&cfg, 1, 1);
    let moved = apply_word_lattice(&cfg, &w, &e)?;
    println!("{w} . E1^1 = {}", moved.to_string_with(&cfg, true));

    let inv = invariant_classes(&cfg);
    let delta = apply_word_lattice(&cfg, &w, &inv.delta)?;
    assert_eq!(delta, inv.delta);
    println!("delta = {} is fixed", inv.delta.to_string_with(&cfg, true));

    let r = RootIndex::new(2, 0);
    let twice = apply_word_lattice(&cfg, &WeylWord(vec![weyltrop::word::Generator::S(r); 2]), &moved)?;
    assert_eq!(twice, moved);
    Ok(())
}
