//! Random link failures on top of deliberate attacks: the closed-form
//! mean-connectivity expressions next to a seeded Monte-Carlo estimate of
//! the probability that the surviving network still withstands its
//! anticipated attacks. The closed forms are approximations; the simulation
//! is the ground truth, and the two are reported side by side.
//!
//! Run with: cargo run --example reliability_mc

use resistnet::designer::{build_s0, StrategyKind};
use resistnet::reliability::{
    closed_form_mean_connectivity, monte_carlo_mean_connectivity, FailureModel, RNG_ALGORITHM,
};

fn main() {
    let (n1, n2, k1, k2) = (6, 2, 1, 2);
    let net = build_s0(n1, n2, k1, k2).unwrap();
    println!(
        "all-non-protected design: {} links, requirement ({k1}, {k2})",
        net.non_protected_count()
    );
    println!("generator: {RNG_ALGORITHM}\n");

    println!("kappa | closed form | MC estimate ± half-width");
    for step in 0..=5u32 {
        let kappa = f64::from(step) * 0.02;
        let closed =
            closed_form_mean_connectivity(n1, n2, k1, k2, StrategyKind::S0, kappa).unwrap();
        let model = FailureModel::new(kappa, 20_000, 2024).unwrap();
        let mc = monte_carlo_mean_connectivity(&net, &model, k1, k2).unwrap();
        println!(
            "{kappa:.2}  |   {closed:.4}    | {:.4} ± {:.4}",
            mc.estimate, mc.half_width
        );
    }

    println!(
        "\nthe protected spanning tree ignores failures entirely: closed form {}",
        closed_form_mean_connectivity(n1, n2, k1, k2, StrategyKind::SNM1, 0.4).unwrap()
    );
}
