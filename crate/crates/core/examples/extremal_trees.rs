//! Extremal irr and sigma over all labeled trees, orders 3 through 8.

use irrlab::graph::DegreeSequence;
use irrlab::verify::extremal_trees;

fn main() -> irrlab::Result<()> {
    irrlab::init_thread_pool_from_env()?;
    println!(
        "{:>2} {:>8} {:>8} {:>14} {:>10} {:>14}",
        "n", "trees", "max irr", "witness", "max sigma", "witness"
    );
    for n in 3..=8 {
        let e = extremal_trees(n)?;
        println!(
            "{n:>2} {:>8} {:>8} {:>14} {:>10} {:>14}",
            e.trees,
            e.max_irr,
            DegreeSequence(e.argmax_irr_degseq).to_string(),
            e.max_sigma,
            DegreeSequence(e.argmax_sigma_degseq).to_string(),
        );
    }
    Ok(())
}
