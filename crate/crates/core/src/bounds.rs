//! Exact big-integer evaluation of the explicit bound formulas used by the
//! extractors, with a symbolic overflow marker once a value would exceed the
//! digit cap. Values are never silently saturated.

use crate::error::{MatroidError, Result};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default cap on the number of decimal digits of an exact value.
pub const DEFAULT_DIGIT_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundValue {
    Exact(BigUint),
    /// The exact value would exceed the digit cap; the expression records
    /// the tower shape.
    Overflow { expr: String, digit_cap: usize },
}

impl BoundValue {
    pub fn exact(&self) -> Option<&BigUint> {
        match self {
            BoundValue::Exact(v) => Some(v),
            BoundValue::Overflow { .. } => None,
        }
    }

    /// Compares against a small count; overflow markers dominate everything.
    pub fn at_least(&self, v: usize) -> bool {
        match self {
            BoundValue::Exact(b) => *b >= BigUint::from(v),
            BoundValue::Overflow { .. } => true,
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(v) => write!(f, "{v}"),
            BoundValue::Overflow { expr, digit_cap } => {
                write!(f, "{expr} (exceeds {digit_cap}-digit cap)")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundExpr {
    /// 4^(4^(2 s^2))
    UnavoidableK { s: u64 },
    /// 4^(s t)
    TriangularOneRank { s: u64, t: u64 },
    /// (s 4^s)^t
    TriangularTwoRank { s: u64, t: u64 },
    /// 4^(s (s 4^s)^t)
    SelfdualRank { s: u64, t: u64 },
    /// (1/2) 4^(4^(2 s^2))
    BigmatroidH { s: u64 },
    /// C(m, a+1)
    BuildcompleteH { m: u64, a: u64 },
    /// m^(a+1)
    UpgradecompleteRank { m: u64, a: u64 },
    /// (16 s^2 p^4)^((2p)^(2p))
    ThreecompletewinRank { s: u64, p: u64 },
    /// m_3 = n0 + C(n0,3); m_k = 4^(s (s 4^s)^(m_{k+1})) for k = 2,1,0
    ThreenonsingularChain { s: u64, n0: u64 },
    /// 7 h
    MaintechDist { h: u64 },
    /// 4 k
    MaingeomDist { k: u64 },
    /// s 2^(4 s)
    PerturbthmUniformThreshold { s: u64 },
}

impl BoundExpr {
    pub fn name(&self) -> &'static str {
        match self {
            BoundExpr::UnavoidableK { .. } => "unavoidable_k",
            BoundExpr::TriangularOneRank { .. } => "triangularone_rank",
            BoundExpr::TriangularTwoRank { .. } => "triangulartwo_rank",
            BoundExpr::SelfdualRank { .. } => "selfdual_rank",
            BoundExpr::BigmatroidH { .. } => "bigmatroid_h",
            BoundExpr::BuildcompleteH { .. } => "buildcomplete_h",
            BoundExpr::UpgradecompleteRank { .. } => "upgradecomplete_rank",
            BoundExpr::ThreecompletewinRank { .. } => "threecompletewin_rank",
            BoundExpr::ThreenonsingularChain { .. } => "threenonsingular_chain",
            BoundExpr::MaintechDist { .. } => "maintech_dist",
            BoundExpr::MaingeomDist { .. } => "maingeom_dist",
            BoundExpr::PerturbthmUniformThreshold { .. } => "perturbthm_uniform_threshold",
        }
    }

    pub fn from_name(name: &str, params: &[u64]) -> Result<BoundExpr> {
        let need = |k: usize| -> Result<()> {
            if params.len() == k {
                Ok(())
            } else {
                Err(MatroidError::BadParameters(format!(
                    "{name} takes {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        Ok(match name {
            "unavoidable_k" => {
                need(1)?;
                BoundExpr::UnavoidableK { s: params[0] }
            }
            "triangularone_rank" => {
                need(2)?;
                BoundExpr::TriangularOneRank { s: params[0], t: params[1] }
            }
            "triangulartwo_rank" => {
                need(2)?;
                BoundExpr::TriangularTwoRank { s: params[0], t: params[1] }
            }
            "selfdual_rank" => {
                need(2)?;
                BoundExpr::SelfdualRank { s: params[0], t: params[1] }
            }
            "bigmatroid_h" => {
                need(1)?;
                BoundExpr::BigmatroidH { s: params[0] }
            }
            "buildcomplete_h" => {
                need(2)?;
                BoundExpr::BuildcompleteH { m: params[0], a: params[1] }
            }
            "upgradecomplete_rank" => {
                need(2)?;
                BoundExpr::UpgradecompleteRank { m: params[0], a: params[1] }
            }
            "threecompletewin_rank" => {
                need(2)?;
                BoundExpr::ThreecompletewinRank { s: params[0], p: params[1] }
            }
            "threenonsingular_chain" => {
                need(2)?;
                BoundExpr::ThreenonsingularChain { s: params[0], n0: params[1] }
            }
            "maintech_dist" => {
                need(1)?;
                BoundExpr::MaintechDist { h: params[0] }
            }
            "maingeom_dist" => {
                need(1)?;
                BoundExpr::MaingeomDist { k: params[0] }
            }
            "perturbthm_uniform_threshold" => {
                need(1)?;
                BoundExpr::PerturbthmUniformThreshold { s: params[0] }
            }
            _ => return Err(MatroidError::BadParameters(format!("unknown bound {name}"))),
        })
    }
}

/// 4^exponent with the digit cap enforced before any huge allocation.
fn pow4(exponent: &BoundValue, cap: usize, expr: impl Fn(&str) -> String) -> BoundValue {
    match exponent {
        BoundValue::Exact(e) => {
            // digits(4^e) = e * log10(4) rounded up; log10(4) < 0.60206
            let digits_times_100000 = e * BigUint::from(60206u64);
            let cap_scaled = BigUint::from(cap) * BigUint::from(100_000u64);
            if digits_times_100000 > cap_scaled {
                BoundValue::Overflow { expr: expr(&e.to_string()), digit_cap: cap }
            } else {
                let e = e.to_u64().expect("capped exponent fits u64");
                BoundValue::Exact(BigUint::from(4u32).pow(e as u32))
            }
        }
        BoundValue::Overflow { expr: inner, digit_cap } => BoundValue::Overflow {
            expr: expr(&format!("({inner})")),
            digit_cap: *digit_cap,
        },
    }
}

fn big_pow(base: BigUint, exp: &BigUint, cap: usize, expr: impl Fn() -> String) -> BoundValue {
    if base.is_one() || base == BigUint::ZERO {
        return BoundValue::Exact(base.pow(exp.to_u32().unwrap_or(1)));
    }
    let base_digits = base.to_string().len();
    let digit_estimate = exp * BigUint::from(base_digits);
    if digit_estimate > BigUint::from(cap) {
        return BoundValue::Overflow { expr: expr(), digit_cap: cap };
    }
    let e = exp.to_u32().expect("capped exponent fits u32");
    let v = base.pow(e);
    if v.to_string().len() > cap {
        BoundValue::Overflow { expr: expr(), digit_cap: cap }
    } else {
        BoundValue::Exact(v)
    }
}

fn binomial_big(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let k = k.min(n - k);
    let mut v = BigUint::one();
    for i in 0..k {
        v = v * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    v
}

pub fn evaluate(expr: &BoundExpr, digit_cap: usize) -> Result<BoundValue> {
    let cap = digit_cap;
    Ok(match expr {
        BoundExpr::UnavoidableK { s } => {
            let inner = BigUint::from(4u32).pow(
                (2 * s * s)
                    .try_into()
                    .map_err(|_| MatroidError::BadParameters("s too large".into()))?,
            );
            pow4(&BoundValue::Exact(inner), cap, |e| format!("4^(4^(2*{s}^2)) = 4^{e}"))
        }
        BoundExpr::TriangularOneRank { s, t } => {
            let e = BigUint::from(*s) * BigUint::from(*t);
            pow4(&BoundValue::Exact(e), cap, |e| format!("4^({s}*{t}) = 4^{e}"))
        }
        BoundExpr::TriangularTwoRank { s, t } => {
            let base = BigUint::from(*s) * BigUint::from(4u32).pow((*s).try_into().unwrap());
            big_pow(base.clone(), &BigUint::from(*t), cap, || {
                format!("({s}*4^{s})^{t} = {base}^{t}")
            })
        }
        BoundExpr::SelfdualRank { s, t } => {
            let base = BigUint::from(*s) * BigUint::from(4u32).pow((*s).try_into().unwrap());
            let inner = big_pow(base.clone(), &BigUint::from(*t), cap, || {
                format!("{base}^{t}")
            });
            let scaled = match inner {
                BoundValue::Exact(v) => BoundValue::Exact(v * BigUint::from(*s)),
                o => o,
            };
            pow4(&scaled, cap, |e| format!("4^({s}*({base})^{t}) = 4^{e}"))
        }
        BoundExpr::BigmatroidH { s } => {
            let k = evaluate(&BoundExpr::UnavoidableK { s: *s }, cap)?;
            match k {
                BoundValue::Exact(v) => BoundValue::Exact(v / BigUint::from(2u32)),
                BoundValue::Overflow { expr, digit_cap } => BoundValue::Overflow {
                    expr: format!("(1/2)*{expr}"),
                    digit_cap,
                },
            }
        }
        BoundExpr::BuildcompleteH { m, a } => BoundValue::Exact(binomial_big(*m, a + 1)),
        BoundExpr::UpgradecompleteRank { m, a } => big_pow(
            BigUint::from(*m),
            &BigUint::from(a + 1),
            cap,
            || format!("{m}^{}", a + 1),
        ),
        BoundExpr::ThreecompletewinRank { s, p } => {
            let base = BigUint::from(16u32)
                * BigUint::from(*s).pow(2)
                * BigUint::from(*p).pow(4);
            let exp = big_pow(BigUint::from(2 * p), &BigUint::from(2 * p), cap, || {
                format!("(2*{p})^(2*{p})")
            });
            match exp {
                BoundValue::Exact(e) => {
                    big_pow(base.clone(), &e, cap, || format!("({base})^((2{p})^(2{p}))"))
                }
                o => o,
            }
        }
        BoundExpr::ThreenonsingularChain { s, n0 } => {
            let mut m = BoundValue::Exact(BigUint::from(*n0) + binomial_big(*n0, 3));
            let base = BigUint::from(*s) * BigUint::from(4u32).pow((*s).try_into().unwrap());
            for k in (0..3).rev() {
                let _ = k;
                // m_{k} = 4^(s * base^{m_{k+1}})
                let powed = match &m {
                    BoundValue::Exact(e) => {
                        big_pow(base.clone(), e, cap, || format!("{base}^(m_next)"))
                    }
                    o => o.clone(),
                };
                let scaled = match powed {
                    BoundValue::Exact(v) => BoundValue::Exact(v * BigUint::from(*s)),
                    o => o,
                };
                m = pow4(&scaled, cap, |e| format!("4^({s}*{base}^(...)) = 4^{e}"));
            }
            m
        }
        BoundExpr::MaintechDist { h } => BoundValue::Exact(BigUint::from(7 * h)),
        BoundExpr::MaingeomDist { k } => BoundValue::Exact(BigUint::from(4 * k)),
        BoundExpr::PerturbthmUniformThreshold { s } => {
            let v = BigUint::from(*s) * BigUint::from(2u32).pow((4 * s).try_into().unwrap());
            BoundValue::Exact(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(e: &BoundExpr) -> BigUint {
        evaluate(e, DEFAULT_DIGIT_CAP).unwrap().exact().unwrap().clone()
    }

    #[test]
    fn paper_arithmetic_examples() {
        assert_eq!(exact(&BoundExpr::UnavoidableK { s: 0 }), BigUint::from(4u32));
        assert_eq!(exact(&BoundExpr::SelfdualRank { s: 2, t: 0 }), BigUint::from(16u32));
        assert_eq!(exact(&BoundExpr::BuildcompleteH { m: 5, a: 2 }), BigUint::from(10u32));
    }

    #[test]
    fn tower_overflow_marker() {
        // s = 2: 4^(4^8) = 4^65536, about 39,457 digits > 10,000
        match evaluate(&BoundExpr::UnavoidableK { s: 2 }, DEFAULT_DIGIT_CAP).unwrap() {
            BoundValue::Overflow { expr, digit_cap } => {
                assert_eq!(digit_cap, DEFAULT_DIGIT_CAP);
                assert!(expr.contains("4^"));
            }
            BoundValue::Exact(_) => panic!("must overflow the 10^4-digit cap"),
        }
        // boundary behaviour: with a large enough cap the same value is exact
        match evaluate(&BoundExpr::UnavoidableK { s: 2 }, 40_000).unwrap() {
            BoundValue::Exact(v) => {
                assert_eq!(v.to_string().len(), 39_457);
            }
            _ => panic!("40k digits suffice"),
        }
    }

    #[test]
    fn monotonicity_spot_checks() {
        for s in 1..4u64 {
            for t in 0..3u64 {
                let a = exact(&BoundExpr::TriangularOneRank { s, t });
                let b = exact(&BoundExpr::TriangularOneRank { s: s + 1, t });
                let c = exact(&BoundExpr::TriangularOneRank { s, t: t + 1 });
                assert!(a <= b && a <= c);
            }
        }
        for m in 3..6u64 {
            for a in 1..3u64 {
                let x = exact(&BoundExpr::BuildcompleteH { m, a });
                let y = exact(&BoundExpr::BuildcompleteH { m: m + 1, a });
                assert!(x <= y);
            }
        }
        assert!(
            exact(&BoundExpr::PerturbthmUniformThreshold { s: 2 })
                < exact(&BoundExpr::PerturbthmUniformThreshold { s: 3 })
        );
    }

    #[test]
    fn name_round_trip() {
        let e = BoundExpr::from_name("selfdual_rank", &[2, 1]).unwrap();
        assert_eq!(e.name(), "selfdual_rank");
        // 4^(s (s 4^s)^t) with s=2, t=1: 4^(2*32) = 4^64
        assert_eq!(exact(&e), BigUint::from(4u32).pow(64));
        assert!(BoundExpr::from_name("nope", &[]).is_err());
        assert!(BoundExpr::from_name("maintech_dist", &[1, 2]).is_err());
    }
}
