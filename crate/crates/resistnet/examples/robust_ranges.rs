//! Which designs survive a change of threat assessment without rebuilding?
//! The all-protected tree tolerates anything; the protected type-2 core
//! tolerates any growth of the type-2 threat; the tight all-non-protected
//! design tolerates none.
//!
//! Run with: cargo run --example robust_ranges

use num_rational::Ratio;
use resistnet::designer::{design, DesignParams};
use resistnet::robustness::robust_range;
use resistnet::verifier::is_resistant_mincut;

fn main() {
    for ratio in [3i64, 5, 7] {
        let params =
            DesignParams::new(20, 5, 5, 9, Ratio::new(ratio, 1), Ratio::new(1, 1)).unwrap();
        let result = design(&params).unwrap();
        let range = robust_range(&result).unwrap();
        println!(
            "cP/cNP = {ratio}: {:<6} robust for k1 in {}, k2 in {}",
            result.strategy.as_str(),
            fmt_interval(range.base_k1, range.k1_max),
            fmt_interval(range.base_k2, range.k2_max),
        );
    }

    // The middle shape from a denser type-2 instance really does absorb any
    // higher type-2 threat without modification.
    let params = DesignParams::new(20, 10, 5, 9, Ratio::new(5, 1), Ratio::new(1, 1)).unwrap();
    let result = design(&params).unwrap();
    println!(
        "\ndenser instance picks {} with {} protected links; checking k2' = 9..=14:",
        result.strategy.as_str(),
        result.p()
    );
    for k2 in 9..=14 {
        let ok = is_resistant_mincut(&result.network, 5, k2).unwrap().resistant;
        println!("  ({}, {k2})-resistant: {ok}", 5);
    }
}

fn fmt_interval(lo: u32, hi: Option<u32>) -> String {
    match hi {
        Some(hi) if hi == lo => format!("{{{lo}}}"),
        Some(hi) => format!("[{lo}, {hi}]"),
        None => format!("[{lo}, ∞)"),
    }
}
