//! Uniform and spine-specified caterpillars, with direct irr and sigma
//! against the closed forms for the uniform family.

use irrlab::closed_forms::{irr_caterpillar_claimed, sigma_caterpillar_claimed};
use irrlab::generators::{
    caterpillar_from_spine, caterpillar_uniform, CaterpillarSpec, SpineSequence,
};
use irrlab::indices::{albertson_irr, sigma};

fn main() -> irrlab::Result<()> {
    println!(
        "{:>3} {:>3} {:>7} {:>7} {:>9} {:>9}",
        "n", "m", "irr", "closed", "sigma", "closed"
    );
    for n in 2..=5 {
        for m in 1..=4 {
            let g = caterpillar_uniform(CaterpillarSpec::new(n, m)?);
            println!(
                "{n:>3} {m:>3} {:>7} {:>7} {:>9} {:>9}",
                albertson_irr(&g),
                irr_caterpillar_claimed(n, m)?,
                sigma(&g),
                sigma_caterpillar_claimed(n, m)?,
            );
        }
    }

    // C(3,3) is the spine arrangement (4,5,4); any permutation relabels leaves
    let spine = SpineSequence::new(vec![4, 5, 4])?;
    let g = caterpillar_from_spine(&spine);
    println!(
        "\nspine (4,5,4): {} vertices, irr {}, sigma {}",
        g.order(),
        albertson_irr(&g),
        sigma(&g)
    );
    Ok(())
}
