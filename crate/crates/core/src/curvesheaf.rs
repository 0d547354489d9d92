//! Classification vocabulary and exact Hom/h^0/h^1 dimension tables for
//! rank-one and rank-two sheaves on genus-one curves, smooth and nodal.
//!
//! Sheaves are symbolic descriptors; every answer is formula driven. The
//! degree of a rank-one torsion-free sheaf is its Euler characteristic, so
//! that on the nodal curve a pushed-forward line bundle of degree `a` on the
//! normalization has degree `a + 1`.

use alloc::format;

use crate::error::{EngineError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveKind {
    Smooth,
    Nodal,
}

/// Rank-one torsion-free sheaf, described by its curve, degree (Euler
/// characteristic) and whether it is locally free. On a smooth curve every
/// such sheaf is a line bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SheafDesc {
    pub curve: CurveKind,
    pub degree: i64,
    pub locally_free: bool,
}

impl SheafDesc {
    pub fn line_bundle(curve: CurveKind, degree: i64) -> SheafDesc {
        SheafDesc {
            curve,
            degree,
            locally_free: true,
        }
    }

    /// The unique non-locally-free sheaf of the given degree on the nodal curve.
    pub fn pushed_forward(degree: i64) -> SheafDesc {
        SheafDesc {
            curve: CurveKind::Nodal,
            degree,
            locally_free: false,
        }
    }
}

/// Rank-two bundle types of odd total degree `2e+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BundleType {
    /// Direct sum of line bundles of degrees `l1 <= e < l2`.
    Split { deg_l1: i64, deg_l2: i64 },
    /// Twist of the nonsplit self-extension of a degree-zero line bundle
    /// (even total degree; listed for completeness of the classification).
    NonsplitDeg0Twist { deg_l: i64 },
    /// The stable bundle: twist of the unique nonsplit extension of `O(p)`
    /// by `O`, total degree `2e+1`.
    StableFp { e: i64 },
    /// On the nodal curve: the unique bundle with a filtration by the
    /// non-locally-free sheaves of degrees `e+n` and `e+1-n`, `n >= 1`.
    /// Its maximal destabilizing subsheaf has degree `e+n`.
    NodalVnDelta { n: i64, e: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BundleDesc {
    pub curve: CurveKind,
    pub ty: BundleType,
}

impl BundleDesc {
    pub fn stable(curve: CurveKind, e: i64) -> BundleDesc {
        BundleDesc {
            curve,
            ty: BundleType::StableFp { e },
        }
    }

    pub fn split(curve: CurveKind, deg_l1: i64, deg_l2: i64) -> Result<BundleDesc> {
        if (deg_l1 + deg_l2) % 2 == 0 {
            return Err(EngineError::TypeMismatch(format!(
                "split bundle of even total degree {}",
                deg_l1 + deg_l2
            )));
        }
        if deg_l1 > deg_l2 {
            return Err(EngineError::TypeMismatch(
                "split summands must be ordered deg_l1 <= deg_l2".into(),
            ));
        }
        Ok(BundleDesc {
            curve,
            ty: BundleType::Split { deg_l1, deg_l2 },
        })
    }

    pub fn nodal_vn(n: i64, e: i64) -> Result<BundleDesc> {
        if n < 1 {
            return Err(EngineError::TypeMismatch(format!(
                "filtration parameter must be >= 1, got {n}"
            )));
        }
        Ok(BundleDesc {
            curve: CurveKind::Nodal,
            ty: BundleType::NodalVnDelta { n, e },
        })
    }

    pub fn total_degree(&self) -> i64 {
        match self.ty {
            BundleType::Split { deg_l1, deg_l2 } => deg_l1 + deg_l2,
            BundleType::NonsplitDeg0Twist { deg_l } => 2 * deg_l,
            BundleType::StableFp { e } => 2 * e + 1,
            BundleType::NodalVnDelta { e, .. } => 2 * e + 1,
        }
    }

    /// Stability: only the `F_p` twists are stable. The nodal `V_n` bundles
    /// are destabilized by their degree-`e+n` subsheaf, and a split bundle by
    /// its larger summand.
    pub fn is_stable(&self) -> bool {
        matches!(self.ty, BundleType::StableFp { .. })
    }
}

/// Degree of `Hom(F1, F2)` for rank-one torsion-free sheaves on the same
/// curve: `deg F2 - deg F1`, plus 1 when neither is locally free.
pub fn deg_hom_rank1(f1: &SheafDesc, f2: &SheafDesc) -> Result<i64> {
    if f1.curve != f2.curve {
        return Err(EngineError::MixedCurves);
    }
    let correction = if !f1.locally_free && !f2.locally_free {
        1
    } else {
        0
    };
    Ok(f2.degree - f1.degree + correction)
}

/// `(h^0, h^1)` of a rank-one torsion-free sheaf on a genus-one curve.
/// `is_trivial` marks the structure sheaf among the degree-zero sheaves.
/// The two branches of the table are pinned to `h^0 - h^1 = chi = deg`.
pub fn h0_h1_rank1(f: &SheafDesc, is_trivial: bool) -> (i64, i64) {
    if is_trivial {
        debug_assert_eq!(f.degree, 0);
        return (1, 1);
    }
    if f.degree > 0 {
        (f.degree, 0)
    } else {
        (0, -f.degree)
    }
}

/// Marks a rank-one target that coincides with a distinguished piece of the
/// bundle's filtration, which shifts the Hom dimension by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TargetRole {
    General,
    /// The larger summand `L2` of a split bundle (same degree as `lambda`).
    SplitLargerSummand,
    /// The quotient `L1 = V/L2` of the nodal `V_n` filtration.
    VnQuotient,
}

/// Dimension of `Hom(V, lambda)` together with whether a surjection exists.
///
/// For a stable `V` of degree `2e+1` and `deg lambda = d >= e+1` the answer
/// is `2d - 2e - 1` with a surjection; for `d <= e` there is no nonzero map.
/// For a split bundle the same formula holds for `d > deg L2`, while
/// `lambda = L2` itself gives `2d - 2e`. For the nodal `V_n` bundles the
/// formula holds for `d > e+n`, and the filtration quotient `L1` is the one
/// extra surjection target, with a one-dimensional Hom space.
pub fn dim_hom_to_rank1(
    v: &BundleDesc,
    lambda: &SheafDesc,
    role: TargetRole,
) -> Result<(i64, bool)> {
    if v.curve != lambda.curve {
        return Err(EngineError::MixedCurves);
    }
    let total = v.total_degree();
    if total % 2 == 0 {
        return Err(EngineError::TypeMismatch(format!(
            "bundle of even total degree {total}"
        )));
    }
    let e = (total - 1) / 2;
    let d = lambda.degree;
    match v.ty {
        BundleType::StableFp { .. } => {
            if role != TargetRole::General {
                return Err(EngineError::TypeMismatch(
                    "a stable bundle has no distinguished summand".into(),
                ));
            }
            if d >= e + 1 {
                Ok((2 * d - 2 * e - 1, true))
            } else {
                Ok((0, false))
            }
        }
        BundleType::Split { deg_l2, .. } => match role {
            TargetRole::General => {
                if d > deg_l2 {
                    Ok((2 * d - 2 * e - 1, true))
                } else {
                    Err(EngineError::TypeMismatch(format!(
                        "split bundle: general target needs degree > {deg_l2}"
                    )))
                }
            }
            TargetRole::SplitLargerSummand => {
                if d != deg_l2 {
                    return Err(EngineError::TypeMismatch(format!(
                        "the larger summand has degree {deg_l2}, not {d}"
                    )));
                }
                Ok((2 * d - 2 * e, true))
            }
            TargetRole::VnQuotient => Err(EngineError::TypeMismatch(
                "split bundle has no nodal filtration quotient".into(),
            )),
        },
        BundleType::NodalVnDelta { n, .. } => match role {
            TargetRole::General => {
                if d > e + n {
                    Ok((2 * d - 2 * e - 1, true))
                } else {
                    Err(EngineError::TypeMismatch(format!(
                        "V_n target below the filtration degree {}",
                        e + n
                    )))
                }
            }
            TargetRole::VnQuotient => {
                if d != e + 1 - n {
                    return Err(EngineError::TypeMismatch(format!(
                        "the filtration quotient has degree {}, not {d}",
                        e + 1 - n
                    )));
                }
                Ok((1, true))
            }
            TargetRole::SplitLargerSummand => {
                Err(EngineError::TypeMismatch("V_n is not split".into()))
            }
        },
        BundleType::NonsplitDeg0Twist { .. } => unreachable!("even degree rejected above"),
    }
}

/// Independent Euler-characteristic oracle: on a genus-one curve
/// `chi(V^dual ⊗ lambda) = 2 deg lambda - deg V`. Whenever the Hom table
/// reports a vanishing `h^1`, its dimension must equal this.
pub fn euler_char_hom(deg_v: i64, deg_lambda: i64) -> i64 {
    2 * deg_lambda - deg_v
}
