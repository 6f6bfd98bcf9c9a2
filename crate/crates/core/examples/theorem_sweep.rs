//! Sweeping every claim over all instances up to a size (default 5).

use reslat::{Search, Theorem};

fn main() {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let search = Search::default();
    for theorem in Theorem::ALL {
        let report = search.sweep(theorem, max).unwrap();
        let last = report.sizes.last().unwrap();
        println!(
            "{theorem:<5} instances={:<4} premise@{max}={:<3} failures={} ({:?})",
            report.total_instances(),
            last.premise,
            report.failures.len(),
            report
                .sizes
                .iter()
                .map(|s| s.elapsed)
                .sum::<std::time::Duration>()
        );
    }
}
