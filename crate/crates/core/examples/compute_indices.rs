//! Every index of a few small graphs, side by side.
//!
//! Run with `cargo run --example compute_indices`.

use irrlab::generators::{complete_bipartite, double_star, path, star};
use irrlab::indices::IndexBundle;
use irrlab::Graph;

fn main() -> irrlab::Result<()> {
    let graphs: Vec<(&str, Graph)> = vec![
        ("P5", path(5)?),
        ("S5", star(5)?),
        ("S(2,3)", double_star(2, 3)?),
        ("K(2,3)", complete_bipartite(2, 3)?),
    ];

    print!("{:<8}", "graph");
    for field in IndexBundle::FIELDS {
        print!(" {field:>15}");
    }
    println!();
    for (name, g) in &graphs {
        let bundle = IndexBundle::compute(g)?;
        print!("{name:<8}");
        for value in bundle.values() {
            print!(" {value:>15}");
        }
        println!();
    }
    Ok(())
}
