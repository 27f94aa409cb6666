//! One reflection written in the three coordinate frames.

use weyltrop::birational::{apply_word, Frame, ParamModel};
use weyltrop::lattice::ShapeConfig;
use weyltrop::word::WeylWord;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let model = ParamModel::generic(ShapeConfig::a(3)?);
    let w: WeylWord = "s1".parse()?;
    for frame in [Frame::Tau, Frame::X, Frame::F] {
        let (state, images) = apply_word(&model, frame, &w)?;
        println!("{frame:?} frame");
        for (v, e) in &images {
            println!("  {v} -> {e}");
        }
        for p in model.params() {
            let img = state.image(p);
            if img.to_string() != p.to_string() {
                println!("  {p} -> {img}");
            }
        }
    }
    Ok(())
}
