//! Upper bounds checked over every labeled tree and connected graph, with
//! the tightest graph of each order.

use irrlab::generators::path;
use irrlab::indices::{albertson_irr, albertson_upper_bound};
use irrlab::verify::check_bounds_suite;

fn main() -> irrlab::Result<()> {
    irrlab::init_thread_pool_from_env()?;
    let p3 = path(3)?;
    println!(
        "P3: irr {} against bound {}",
        albertson_irr(&p3),
        albertson_upper_bound(&p3)?
    );
    for r in check_bounds_suite(7, 5)? {
        println!("{}", r.csv_line());
    }
    Ok(())
}
