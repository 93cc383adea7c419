//! Building densities and pushing them through the transform operators.
//!
//!     cargo run --example densities

use stieltjes::density::{apply_transform, compose_transforms, make_density, Support, TransformKind};

fn main() -> stieltjes::error::Result<()> {
    let phi = make_density(|z: f64| (-z).exp(), 0.0, f64::INFINITY, Support::new(0.0, f64::INFINITY), true)?;

    let chain = [
        TransformKind::Dilation { a: 2.0 },
        TransformKind::Moment,
        TransformKind::Resolvent { a: 1.0 },
        TransformKind::Inversion { a: 1.0 },
        TransformKind::SquareRoot,
    ];
    println!("{:<28} {:>8} {:>8} {:>12}", "transform", "p0", "delta", "value at 1");
    for k in chain {
        let t = apply_transform(&phi, k)?;
        println!("{:<28} {:>8.3} {:>8.3} {:>12.6}", format!("{k:?}"), t.p0(), t.delta(), t.eval(1.0));
    }

    let composed = compose_transforms(&phi, &[TransformKind::Dilation { a: 2.0 }, TransformKind::Resolvent { a: 1.0 }])?;
    println!("\nT3(a=1) after T1(a=2) at ζ=0.5: {:.12}", composed.eval(0.5));
    println!("by hand  e^(-1)/1.5:             {:.12}", (-1.0f64).exp() / 1.5);

    let heavy = make_density(|z: f64| z.powf(-0.5) / (1.0 + z), -0.5, 1.5, Support::new(0.0, f64::INFINITY), true)?;
    match compose_transforms(&heavy, &[TransformKind::Moment, TransformKind::Moment]) {
        Ok(_) => println!("unexpected: second moment accepted"),
        Err(e) => println!("\nrejected as expected: {e}"),
    }

    match make_density(|_| -1.0, 0.0, 1.0, Support::new(0.0, f64::INFINITY), true) {
        Ok(_) => println!("unexpected: negative density accepted"),
        Err(e) => println!("rejected as expected: {e}"),
    }
    Ok(())
}
