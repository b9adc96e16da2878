//! Spectral radius by power iteration and the largest `λ - d̄` over all
//! graphs of small order.

use irrlab::generators::{graph_from_mask, path, star};
use irrlab::indices::{bell_max_cs, cs_irregularity, spectral_radius};
use irrlab::verify::bell_maximizer;

fn main() -> irrlab::Result<()> {
    irrlab::init_thread_pool_from_env()?;
    for (name, g) in [("P4", path(4)?), ("S6", star(6)?)] {
        println!(
            "{name}: lambda = {:.9}, lambda - mean = {:.9}",
            spectral_radius(&g)?,
            cs_irregularity(&g)?
        );
    }
    println!();
    for n in 2..=6 {
        let (best, mask) = bell_maximizer(n)?;
        let g = graph_from_mask(n, mask);
        println!(
            "n={n}: enumerated {best:.9}, closed form {:.9}, maximizer edges {:?}",
            bell_max_cs(n)?,
            g.edges()
        );
    }
    Ok(())
}
