//! The minimum number of non-protected links any resistant design needs, as
//! a function of the protected-link budget p: a piecewise-linear curve with
//! breakpoints A (no protection), C (protected type-2 tree) and E (fully
//! protected tree). Candidate optima live at those corners.
//!
//! Run with: cargo run --example bound_curve

use resistnet::bounds::{curve, curve_rows, lp_oracle};

fn main() {
    let (n1, n2, k1, k2) = (20u32, 5u32, 5u32, 9u32);
    let c = curve(n1, n2, k1, k2).unwrap();
    println!("bound curve for n1={n1} n2={n2} k1={k1} k2={k2}");
    for bp in &c.breakpoints {
        println!("  breakpoint {:?}: p = {:>2}, phi = {}", bp.label, bp.p, bp.phi);
    }
    println!(
        "  slopes: A-B {}, B-C {}, C-D {}, D-E {}\n",
        c.slope_ab, c.slope_bc, c.slope_cd, c.slope_de
    );

    println!("p,ceil(phi),segment");
    for row in curve_rows(n1, n2, k1, k2).unwrap() {
        println!("{},{},{}", row.p, row.min_links, row.segment);
    }

    // The closed form is the exact optimum of the block-count program; spot
    // check a few budgets against the enumeration oracle.
    for p in [0, 4, 12, 24] {
        let oracle = lp_oracle(n1, n2, k1, k2, p).unwrap();
        println!("oracle check p={p}: {oracle}");
    }
}
