//! Lower bound on the number of non-protected links as a function of the
//! protected-link budget `p`: exact closed form, a brute-force integer-program
//! oracle over contracted block counts, and the piecewise bound curve with its
//! A-E breakpoints.

use num_rational::Ratio;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

pub type Rational = Ratio<i64>;

/// Ceiling on node counts and threat levels accepted by the bound
/// operations; keeps every i64 product exact.
pub const MAX_BOUND_INPUT: u32 = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("threat levels must satisfy k1 <= k2, got k1={k1}, k2={k2}")]
    ThreatOrder { k1: u32, k2: u32 },
    #[error("both layers must be non-empty, got n1={n1}, n2={n2}")]
    EmptyLayer { n1: u32, n2: u32 },
    #[error("inputs capped at {MAX_BOUND_INPUT}, got n1={n1}, n2={n2}, k1={k1}, k2={k2}")]
    InputTooLarge { n1: u32, n2: u32, k1: u32, k2: u32 },
    #[error("protected budget p={p} out of range 0..={max}")]
    BudgetOutOfRange { p: u32, max: u32 },
}

fn validate(n1: u32, n2: u32, k1: u32, k2: u32, p: Option<u32>) -> Result<(), BoundsError> {
    if n1 == 0 || n2 == 0 {
        return Err(BoundsError::EmptyLayer { n1, n2 });
    }
    if [n1, n2, k1, k2].iter().any(|&v| v > MAX_BOUND_INPUT) {
        return Err(BoundsError::InputTooLarge { n1, n2, k1, k2 });
    }
    if k1 > k2 {
        return Err(BoundsError::ThreatOrder { k1, k2 });
    }
    if let Some(p) = p {
        let max = n1 + n2 - 1;
        if p > max {
            return Err(BoundsError::BudgetOutOfRange { p, max });
        }
    }
    Ok(())
}

/// Exact bound value plus the usable integer link count `ceil(phi)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bound {
    pub phi: Rational,
    pub min_links: u32,
}

/// Minimum number of non-protected links any resistant network with `p`
/// protected links must carry:
///
/// - `(n1(k1+1) + (n2-p)(k2+1)) / 2` for `0 <= p <= n2-2`,
/// - `(n-p)(k1+1) / 2`              for `n2-1 <= p <= n-2`,
/// - `0`                            for `p = n-1`.
pub fn lower_bound(n1: u32, n2: u32, k1: u32, k2: u32, p: u32) -> Result<Bound, BoundsError> {
    validate(n1, n2, k1, k2, Some(p))?;
    let phi = phi_closed_form(n1, n2, k1, k2, p);
    Ok(Bound { phi, min_links: phi.ceil().to_integer() as u32 })
}

fn phi_closed_form(n1: u32, n2: u32, k1: u32, k2: u32, p: u32) -> Rational {
    let (n1, n2, k1, k2, p) = (n1 as i64, n2 as i64, k1 as i64, k2 as i64, p as i64);
    let n = n1 + n2;
    if p == n - 1 {
        Rational::zero()
    } else if n2 >= 2 && p <= n2 - 2 {
        Rational::new(n1 * (k1 + 1) + (n2 - p) * (k2 + 1), 2)
    } else {
        Rational::new((n - p) * (k1 + 1), 2)
    }
}

/// Brute-force optimum of the contraction integer program: enumerates every
/// admissible block-count triple `(nu1, nu2, nu0)` and minimizes the
/// three-case degree objective.
///
/// Independent of [`lower_bound`]; the closed form is checked against this
/// oracle exhaustively in the acceptance suite.
pub fn lp_oracle(n1: u32, n2: u32, k1: u32, k2: u32, p: u32) -> Result<Rational, BoundsError> {
    validate(n1, n2, k1, k2, Some(p))?;
    let (n1, n2, k1, k2, p) = (n1 as i64, n2 as i64, k1 as i64, k2 as i64, p as i64);
    let n = n1 + n2;
    let mut best: Option<Rational> = None;
    for nu1 in 0..=n1 {
        for nu2 in 0..=n2 {
            for nu0 in 0..=n1.min(n2) {
                let feasible = nu0 + nu1 + nu2 >= n - p
                    && nu0 + nu1 >= n1 - p
                    && nu0 + nu2 >= n2 - p
                    && nu1 + nu0 >= 1
                    && nu2 + nu0 >= 1;
                if !feasible {
                    continue;
                }
                let objective = if nu2 + nu0 > 1 {
                    Rational::new(nu1 * (k1 + 1) + (nu0 + nu2) * (k2 + 1), 2)
                } else if nu1 + nu2 + nu0 == 1 {
                    Rational::zero()
                } else {
                    // nu1 >= 1 and nu2 + nu0 == 1
                    Rational::new((nu1 + 1) * (k1 + 1), 2)
                };
                best = Some(best.map_or(objective, |b: Rational| b.min(objective)));
            }
        }
    }
    Ok(best.expect("nu1=n1, nu2=n2, nu0=0 is always feasible"))
}

/// Labels for the bound curve's breakpoints.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum BreakpointLabel {
    A,
    B,
    C,
    D,
    E,
}

impl BreakpointLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            BreakpointLabel::A => "A",
            BreakpointLabel::B => "B",
            BreakpointLabel::C => "C",
            BreakpointLabel::D => "D",
            BreakpointLabel::E => "E",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Breakpoint {
    pub label: BreakpointLabel,
    pub p: u32,
    pub phi: Rational,
}

/// The piecewise bound as breakpoints A(p=0), B(p=n2-2), C(p=n2-1),
/// D(p=n-2), E(p=n-1) with the absolute slope of each segment.
///
/// B is omitted when `n2 = 1` (its nominal budget would be negative);
/// coinciding breakpoints of degenerate instances are all kept.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundCurve {
    pub n1: u32,
    pub n2: u32,
    pub k1: u32,
    pub k2: u32,
    pub breakpoints: Vec<Breakpoint>,
    pub slope_ab: Rational,
    pub slope_bc: Rational,
    pub slope_cd: Rational,
    pub slope_de: Rational,
}

pub fn curve(n1: u32, n2: u32, k1: u32, k2: u32) -> Result<BoundCurve, BoundsError> {
    validate(n1, n2, k1, k2, None)?;
    let n = n1 + n2;
    let mut breakpoints = Vec::with_capacity(5);
    let mut push = |label, p| {
        breakpoints.push(Breakpoint { label, p, phi: phi_closed_form(n1, n2, k1, k2, p) });
    };
    push(BreakpointLabel::A, 0);
    if n2 >= 2 {
        push(BreakpointLabel::B, n2 - 2);
    }
    push(BreakpointLabel::C, n2 - 1);
    push(BreakpointLabel::D, n - 2);
    push(BreakpointLabel::E, n - 1);
    let (k1r, k2r) = (k1 as i64, k2 as i64);
    Ok(BoundCurve {
        n1,
        n2,
        k1,
        k2,
        breakpoints,
        slope_ab: Rational::new(k2r + 1, 2),
        slope_bc: Rational::new((k2r + 1) + (k2r - k1r), 2),
        slope_cd: Rational::new(k1r + 1, 2),
        slope_de: Rational::from_integer(k1r + 1),
    })
}

impl BoundCurve {
    pub fn breakpoint(&self, label: BreakpointLabel) -> Option<&Breakpoint> {
        self.breakpoints.iter().find(|b| b.label == label)
    }
}

/// One row of the per-budget curve table emitted by the `bound` command.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveRow {
    pub p: u32,
    pub phi: Rational,
    pub min_links: u32,
    pub segment: &'static str,
}

/// Evaluates the bound at every admissible `p`, labelling breakpoints with
/// their letter and interior points with the segment they lie on.
pub fn curve_rows(n1: u32, n2: u32, k1: u32, k2: u32) -> Result<Vec<CurveRow>, BoundsError> {
    validate(n1, n2, k1, k2, None)?;
    let n = n1 + n2;
    let rows = (0..n)
        .map(|p| {
            let segment = if p == 0 {
                "A"
            } else if n2 >= 2 && p == n2 - 2 {
                "B"
            } else if p == n2 - 1 {
                "C"
            } else if p == n - 2 {
                "D"
            } else if p == n - 1 {
                "E"
            } else if n2 >= 2 && p < n2 - 2 {
                "AB"
            } else {
                "CD"
            };
            let bound = lower_bound(n1, n2, k1, k2, p).expect("p in range");
            CurveRow { p, phi: bound.phi, min_links: bound.min_links, segment }
        })
        .collect();
    Ok(rows)
}
