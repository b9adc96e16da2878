//! Searches spine arrangements for the one maximizing irr and compares it
//! with the end-placement pattern. Pass degrees as arguments to try your own,
//! e.g. `cargo run --example hy1_ordering -- 2 3 4 5 6 7 8`.

use irrlab::verify::{check_hy1, HY1_PRESETS};

fn main() -> irrlab::Result<()> {
    let custom: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("degrees are positive integers"))
        .collect();
    let inputs: Vec<Vec<usize>> = if custom.is_empty() {
        HY1_PRESETS.iter().map(|p| p.to_vec()).collect()
    } else {
        vec![custom]
    };
    for values in inputs {
        let o = check_hy1(&values)?;
        let pattern_irr = o
            .pattern_irr
            .map_or("unrealizable".to_string(), |v| v.to_string());
        println!(
            "{values:?}: pattern {:?} -> {pattern_irr}; best {:?} -> {} ({} arrangements) [{}]",
            o.pattern, o.argmax, o.max_irr, o.realizable, o.record.status
        );
    }
    Ok(())
}
