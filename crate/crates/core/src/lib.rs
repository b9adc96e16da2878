//! Degree-based irregularity indices on small graphs, generators for the
//! tree families they are usually studied on, and a checker that compares
//! published closed forms against direct computation.
//!
//! ```
//! use irrlab::generators::{caterpillar_uniform, CaterpillarSpec};
//! use irrlab::indices::{albertson_irr, sigma};
//!
//! let c33 = caterpillar_uniform(CaterpillarSpec::new(3, 3).unwrap());
//! assert_eq!(albertson_irr(&c33), 32);
//! assert_eq!(sigma(&c33), 104);
//! ```

pub mod cli;
pub mod closed_forms;
pub mod edgelist;
pub mod error;
pub mod format;
pub mod generators;
pub mod graph;
pub mod indices;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{DegreeSequence, Graph};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "IRRLAB_THREADS";

/// Sizes the global worker pool from `IRRLAB_THREADS` when it is set to a
/// positive integer. Has no effect once the pool exists.
pub fn init_thread_pool_from_env() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        Error::invalid(format!(
            "{THREADS_ENV} must be a positive integer, got '{raw}'"
        ))
    })?;
    // a second call finds the pool already built, which is fine
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global();
    Ok(())
}
