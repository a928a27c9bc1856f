//! Sweep the type-2 threat level: while attacks stay cheap to absorb, the
//! optimal design is all-non-protected and its cost climbs with every extra
//! anticipated attack; past a switch point the designer protects the type-2
//! layer outright and the cost plateaus, since protected links ignore any
//! further threat growth.
//!
//! Run with: cargo run --example threat_sweep

use num_rational::Ratio;
use resistnet::robustness::sweep_k2;

fn main() {
    let values: Vec<u32> = (5..=14).collect();
    let rows = sweep_k2(20, 10, 5, Ratio::new(5, 1), Ratio::new(1, 1), &values);

    println!("k2 | strategy | protected | non-protected | cost");
    println!("---+----------+-----------+---------------+-----");
    for row in &rows {
        match &row.outcome {
            Ok(entry) => println!(
                "{:>2} | {:<8} | {:>9} | {:>13} | {}",
                row.k2,
                entry.strategy.as_str(),
                entry.p,
                entry.m,
                entry.cost
            ),
            Err(e) => println!("{:>2} | error: {e}", row.k2),
        }
    }

    let switch = rows
        .windows(2)
        .find(|w| {
            w[0].outcome.as_ref().map(|e| e.strategy) != w[1].outcome.as_ref().map(|e| e.strategy)
        })
        .map(|w| w[1].k2);
    println!("\nstrategy switches at k2 = {switch:?}");
}
