//! Runs every suite and prints the per-claim summary. Pass `csv` or `json`
//! as the first argument for the machine-readable report instead.

use irrlab::verify::{run_all, VerifyConfig};

fn main() -> irrlab::Result<()> {
    irrlab::init_thread_pool_from_env()?;
    let report = run_all(&VerifyConfig::default())?;
    let text = match std::env::args().nth(1).as_deref() {
        Some("csv") => report.to_csv(),
        Some("json") => report.to_json(),
        _ => report.to_text(),
    };
    print!("{text}");
    Ok(())
}
