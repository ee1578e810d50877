//! Tabulates the communication kernel, its primitive and the wall potential.
//!
//!     cargo run --example kernels_and_walls

use flockwall::{CommunicationKernel, ConfinementGeometry, WallPotential};

fn main() -> flockwall::Result<()> {
    println!("{:>6} {:>12} {:>12} {:>12} {:>12}", "r", "phi(0.25)", "Phi(0.25)", "Phi(0.5)", "Phi(1)");
    let k25 = CommunicationKernel::power_law(1.0, 0.25)?;
    let k50 = CommunicationKernel::power_law(1.0, 0.5)?;
    let k100 = CommunicationKernel::power_law(1.0, 1.0)?;
    for r in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0] {
        println!(
            "{r:>6} {:>12.6} {:>12.6} {:>12.6} {:>12.6}",
            k25.eval(r)?,
            k25.primitive(r)?,
            k50.primitive(r)?,
            k100.primitive(r)?
        );
    }
    for (name, k) in [("beta = 0.25", k25), ("beta = 0.5", k50), ("beta = 1", k100)] {
        println!("{name}: fat tail = {}, Phi(inf) = {}", k.is_fat_tail(), k.primitive(f64::INFINITY)?);
    }

    let wall = WallPotential::new(1.0, 1.0)?;
    let box_ = ConfinementGeometry::interval(0.0, 4.0)?;
    println!();
    println!("{:>6} {:>14} {:>14} {:>14} {:>14}", "x", "U", "F", "U''", "F on [0,4]");
    for x in [0.05, 0.1, 0.25, 0.5, 0.75, 0.99, 1.0, 2.0, 3.5] {
        println!(
            "{x:>6} {:>14.6e} {:>14.6e} {:>14.6e} {:>14.6e}",
            wall.potential(x)?,
            wall.force(x)?,
            wall.curvature(x)?,
            box_.force(&wall, x)?
        );
    }
    Ok(())
}
