//! The bilinear relation between σ values in both modes.

use weyltrop::characters::{core_partition, sigma, verify_bilinear, Mode, QContext};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let ctx = QContext::new((1, 2), (3, 4), (2, 3), 1e-20, 200)?;
    println!("truncation T = {}", ctx.truncation);

    let nu = [1, -1, 0];
    println!("lambda(nu) = {}", core_partition(&nu));
    println!("sigma = {}", sigma(&ctx, &nu, 0, Mode::Schur)?.to_f64());
    for i in 1..=3 {
        let r = verify_bilinear(&ctx, &nu, i, 1, Mode::Schur)?;
        println!("schur i={i} residual {:.3e}", r.to_f64());
    }

    let nu = [1, 0, 2, -1];
    for i in 1..=4 {
        let r = verify_bilinear(&ctx, &nu, i, 0, Mode::Uc)?;
        println!("uc    i={i} residual {:.3e}", r.to_f64());
    }
    Ok(())
}
