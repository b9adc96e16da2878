//! Parses an edge list, reports its indices and writes it back out.

use irrlab::edgelist;
use irrlab::indices::{albertson_irr, sigma, szekeres_wilf};

const INPUT: &str = "\
# K(2,3) with an explicit vertex count
p 5
0 2
0 3
0 4
1 2
1 3
1 4
";

fn main() -> irrlab::Result<()> {
    let g = edgelist::parse(INPUT)?;
    println!(
        "{} vertices, {} edges, degrees {}, irr {}, sigma {}, degeneracy {}",
        g.order(),
        g.size(),
        g.degree_sequence(),
        albertson_irr(&g),
        sigma(&g),
        szekeres_wilf(&g)?
    );
    print!("{}", edgelist::write(&g));

    match edgelist::parse("0 1\n2 2\n") {
        Ok(_) => unreachable!("self-loops are rejected"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
