//! The elliptic surface, its truncated cohomology ring, and the dimension
//! bookkeeping used by the moduli-space count.
//!
//! A surface here is the data `(p_g, m_1, m_2)` with both multiplicities odd,
//! together with an optional section and an optional cover degree `d` (the
//! base surface itself has `d = 1`). Classes live in degrees 0, 2, 4 over a
//! fixed generator set; all degree-2 products are driven by a pairing table
//! whose entries are exact rational functions.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{EngineError, Result};
use crate::exact::{int, rf, v, Rat, RatFunc, Var};

/// Degree-2 generators. `F` is the fiber, `Kappa` the primitive vertical
/// class with `m1*m2*Kappa = F`, `Sigma` the section, `Delta` the determinant
/// class of the reference bundle, `Cycle` the probe 2-cycle, and `PhiDelta`,
/// `PhiCycle` the pullbacks of the latter two to a degree-`d` cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Gen2 {
    F,
    Kappa,
    Sigma,
    Delta,
    Cycle,
    PhiDelta,
    PhiCycle,
}

impl Gen2 {
    pub const ALL: [Gen2; 7] = [
        Gen2::F,
        Gen2::Kappa,
        Gen2::Sigma,
        Gen2::Delta,
        Gen2::Cycle,
        Gen2::PhiDelta,
        Gen2::PhiCycle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Gen2::F => "f",
            Gen2::Kappa => "k",
            Gen2::Sigma => "s",
            Gen2::Delta => "delta",
            Gen2::Cycle => "S",
            Gen2::PhiDelta => "phi*delta",
            Gen2::PhiCycle => "phi*S",
        }
    }
}

/// Surface parameters. Multiplicities may be symbolic; when numeric they
/// must be odd and at least 1, and a section forces `m1 = m2 = 1`.
#[derive(Debug, Clone)]
pub struct EllipticSurface {
    pub pg: RatFunc,
    pub m1: RatFunc,
    pub m2: RatFunc,
    pub has_section: bool,
    /// Degree of the cover `T -> S` carrying the section (1 for `S` itself).
    pub cover_degree: RatFunc,
}

impl EllipticSurface {
    /// Fully symbolic surface with two multiple fibers and no section.
    pub fn symbolic() -> EllipticSurface {
        EllipticSurface {
            pg: v(Var::Pg),
            m1: v(Var::M1),
            m2: v(Var::M2),
            has_section: false,
            cover_degree: rf(1),
        }
    }

    /// Surface with a section (`m1 = m2 = 1`), symbolic genus.
    pub fn with_section() -> EllipticSurface {
        EllipticSurface {
            pg: v(Var::Pg),
            m1: rf(1),
            m2: rf(1),
            has_section: true,
            cover_degree: rf(1),
        }
    }

    /// Numeric surface. Rejects even or nonpositive multiplicities.
    pub fn numeric(pg: i64, m1: i64, m2: i64) -> Result<EllipticSurface> {
        if m1 < 1 || m2 < 1 || m1 % 2 == 0 || m2 % 2 == 0 {
            return Err(EngineError::ConstraintViolation(format!(
                "multiplicities must be odd and >= 1, got ({m1}, {m2})"
            )));
        }
        Ok(EllipticSurface {
            pg: rf(pg),
            m1: rf(m1),
            m2: rf(m2),
            has_section: m1 == 1 && m2 == 1,
            cover_degree: rf(1),
        })
    }

    /// The degree-`d` cover of `self` carrying a section; `d` symbolic.
    pub fn symbolic_cover(&self) -> EllipticSurface {
        EllipticSurface {
            pg: self.pg.clone(),
            m1: self.m1.clone(),
            m2: self.m2.clone(),
            has_section: true,
            cover_degree: v(Var::D),
        }
    }

    /// Holomorphic Euler characteristic `chi(O) = p_g + 1`.
    pub fn chi(&self) -> RatFunc {
        &self.pg + &rf(1)
    }

    /// Topological Euler number `12 * (p_g + 1)`.
    pub fn euler_number(&self) -> RatFunc {
        &rf(12) * &self.chi()
    }

    /// `(c_1^2, c_2)` of the surface: `(0, 12(p_g+1))`.
    pub fn chern_numbers(&self) -> (RatFunc, RatFunc) {
        (RatFunc::zero(), self.euler_number())
    }

    /// Coefficient of `kappa` in the canonical class:
    /// `(p_g-1)m1*m2 + (m1-1)m2 + (m2-1)m1`.
    pub fn canonical_kappa_coefficient(&self) -> RatFunc {
        let one = rf(1);
        let a = &(&self.pg - &one) * &(&self.m1 * &self.m2);
        let b = &(&self.m1 - &one) * &self.m2;
        let c = &(&self.m2 - &one) * &self.m1;
        &(&a + &b) + &c
    }

    /// Canonical class `(p_g-1)f + (m1-1)F_1 + (m2-1)F_2`, expressed in the
    /// `kappa` basis.
    pub fn canonical_class(&self) -> SurfaceClass {
        SurfaceClass::gen2(Gen2::Kappa).scale(&self.canonical_kappa_coefficient())
    }

    /// Todd class `1 + (r/2) f + (p_g+1) [pt]` with
    /// `r = -(p_g+1) + 1/m1 + 1/m2`.
    pub fn todd_class(&self) -> SurfaceClass {
        let mut t = SurfaceClass::scalar(rf(1));
        let r = self.todd_fiber_coefficient();
        t.set_deg2(Gen2::F, &r / &rf(2));
        t.set_deg4(self.chi());
        t
    }

    /// The `r` in the degree-2 Todd piece `(r/2) f`.
    pub fn todd_fiber_coefficient(&self) -> RatFunc {
        let inv_m1 = rf(1) / &self.m1.clone();
        let inv_m2 = rf(1) / &self.m2.clone();
        &(&-&self.chi() + &inv_m1) + &inv_m2
    }

    /// Pairing context for classes on this surface.
    pub fn pairing_ctx(&self, e: RatFunc) -> PairingCtx {
        PairingCtx {
            pg: self.pg.clone(),
            m1: self.m1.clone(),
            m2: self.m2.clone(),
            e,
            d: self.cover_degree.clone(),
            has_section: self.has_section,
        }
    }
}

/// Dimension of the moduli space: `-p_1 - 3 chi(O)`.
pub fn moduli_dimension(p1: &RatFunc, surface: &EllipticSurface) -> RatFunc {
    &-p1 - &(&rf(3) * &surface.chi())
}

/// Solve `2t = -p - 3(p_g+1)`; the dimension of the moduli space is always
/// even, so an odd value signals inconsistent `(w, p)` input.
pub fn dim_parity(p: i64, pg: i64) -> Result<i64> {
    let dim = -p - 3 * (pg + 1);
    if dim < 0 {
        return Err(EngineError::ConstraintViolation(format!(
            "negative expected dimension {dim}"
        )));
    }
    if dim % 2 != 0 {
        return Err(EngineError::ParityViolation(format!(
            "-p - 3(pg+1) = {dim} is odd"
        )));
    }
    Ok(dim / 2)
}

/// Second Chern class of the fiberwise-stable reference bundle:
/// `c = (delta^2 + 3(p_g+1)) / 4`.
pub fn c2_of_v0(surface: &EllipticSurface, delta_sq: &RatFunc) -> RatFunc {
    &(delta_sq + &(&rf(3) * &surface.chi())) / &rf(4)
}

/// `(h^0, h^1, h^2)` of `O(-sigma + (p_g+1-a)f)` on a surface with a section.
/// Independent of `p_g`; the triple always satisfies `h0 - h1 + h2 = a - 1`,
/// which is the Riemann-Roch value of the twist.
pub fn coh_dims_section_case(a: i64) -> (i64, i64, i64) {
    let h1 = if a <= 0 { 1 - a } else { 0 };
    let h2 = if a >= 2 { a - 1 } else { 0 };
    (0, h1, h2)
}

/// Riemann-Roch on the surface for the twist in `coh_dims_section_case`:
/// `chi(-sigma + (p_g+1-a)f) = chi(O) + (D^2 - D.K)/2 = a - 1`, identically
/// in `p_g`. Used as the independent oracle for the table above.
pub fn coh_chi_riemann_roch(a: i64, pg: &RatFunc) -> RatFunc {
    let chi_o = pg + &rf(1);
    // D = -sigma + (pg+1-a) f: D^2 = -(pg+1) - 2(pg+1-a), D.K = -(pg-1).
    let b = &chi_o - &rf(a);
    let d_sq = &-&chi_o - &(&rf(2) * &b);
    let d_k = -(pg - &rf(1));
    &chi_o + &(&(&d_sq - &d_k) / &rf(2))
}

/// Pairing data of a candidate divisor for the suitability test.
#[derive(Debug, Clone)]
pub struct DivisorPairings {
    pub f_dot_d: Rat,
    pub l_dot_d: Rat,
    pub d_sq: Rat,
    pub d_dot_delta: Rat,
}

/// Ambient data for the suitability test: the pairings of the polarization
/// and the fiber against the fixed determinant class, and the instanton
/// number bound.
#[derive(Debug, Clone)]
pub struct SuitabilityData {
    pub f_dot_delta: Rat,
    pub l_dot_delta: Rat,
    pub c: Rat,
}

/// A polarization `L` is suitable when every divisor `D` with
/// `-D^2 + D.Delta <= c` has `f.(2D - Delta) = 0` or
/// `sign f.(2D - Delta) = sign L.(2D - Delta)`. Candidates outside the bound
/// impose no condition.
pub fn suitability_check(data: &SuitabilityData, candidate: &DivisorPairings) -> bool {
    if -candidate.d_sq.clone() + candidate.d_dot_delta.clone() > data.c {
        return true;
    }
    let fx = int(2) * candidate.f_dot_d.clone() - data.f_dot_delta.clone();
    let lx = int(2) * candidate.l_dot_d.clone() - data.l_dot_delta.clone();
    fx.is_zero() || (fx * lx).is_positive()
}

/// Pairing table for degree-2 generators. Entries not listed are outside the
/// calculus and error loudly.
#[derive(Debug, Clone)]
pub struct PairingCtx {
    pub pg: RatFunc,
    pub m1: RatFunc,
    pub m2: RatFunc,
    /// Fiber degree parameter: the determinant class has `delta.f = 2e+1`.
    pub e: RatFunc,
    /// Cover degree (1 on the base surface).
    pub d: RatFunc,
    pub has_section: bool,
}

impl PairingCtx {
    pub fn fiber_degree(&self) -> RatFunc {
        &(&rf(2) * &self.e) + &rf(1)
    }

    fn m1m2(&self) -> RatFunc {
        &self.m1 * &self.m2
    }

    /// Intersection pairing of two degree-2 generators, as a multiple of `[pt]`.
    pub fn pair(&self, a: Gen2, b: Gen2) -> Result<RatFunc> {
        use Gen2::*;
        let (x, y) = if a <= b { (a, b) } else { (b, a) };
        let val = match (x, y) {
            (F, F) | (F, Kappa) | (Kappa, Kappa) => RatFunc::zero(),
            (F, Sigma) => rf(1),
            (Kappa, Sigma) => rf(1) / &self.m1m2(),
            (F, Delta) => self.fiber_degree(),
            (Kappa, Delta) => &self.fiber_degree() / &self.m1m2(),
            (F, Cycle) => v(Var::Fs),
            // kappa = f/(m1 m2), so the probe pairing is determined by fS.
            (Kappa, Cycle) => &v(Var::Fs) / &self.m1m2(),
            (Sigma, Sigma) => -&(&self.d * &(&self.pg + &rf(1))),
            (Sigma, Cycle) => v(Var::Ss),
            (Delta, Delta) => v(Var::DeltaSq),
            (Delta, Cycle) => v(Var::Ds),
            (Cycle, Cycle) => v(Var::S2),
            (Sigma, PhiDelta) => v(Var::DSig),
            (Sigma, PhiCycle) => v(Var::Ss),
            (F, PhiDelta) => self.fiber_degree(),
            (F, PhiCycle) => v(Var::Fs),
            (PhiDelta, PhiDelta) => &self.d * &v(Var::DeltaSq),
            (PhiDelta, PhiCycle) => &self.d * &v(Var::Ds),
            (PhiCycle, PhiCycle) => &self.d * &v(Var::S2),
            _ => {
                return Err(EngineError::ProductNotInCalculus(format!(
                    "pairing {} . {}",
                    a.name(),
                    b.name()
                )))
            }
        };
        Ok(val)
    }

    /// Pairing of a generator against the probe cycle, used by the slant
    /// product.
    pub fn pair_cycle(&self, a: Gen2) -> Result<RatFunc> {
        self.pair(a, Gen2::Cycle)
    }
}

/// Element of the truncated cohomology ring, graded in degrees 0, 2, 4.
#[derive(Debug, Clone, PartialEq)]
pub struct SurfaceClass {
    deg0: RatFunc,
    deg2: BTreeMap<Gen2, RatFunc>,
    /// Coefficient of the point class.
    deg4: RatFunc,
}

impl SurfaceClass {
    pub fn zero() -> SurfaceClass {
        SurfaceClass {
            deg0: RatFunc::zero(),
            deg2: BTreeMap::new(),
            deg4: RatFunc::zero(),
        }
    }

    pub fn scalar(c: RatFunc) -> SurfaceClass {
        SurfaceClass {
            deg0: c,
            deg2: BTreeMap::new(),
            deg4: RatFunc::zero(),
        }
    }

    pub fn gen2(g: Gen2) -> SurfaceClass {
        let mut deg2 = BTreeMap::new();
        deg2.insert(g, RatFunc::one());
        SurfaceClass {
            deg0: RatFunc::zero(),
            deg2,
            deg4: RatFunc::zero(),
        }
    }

    pub fn point(c: RatFunc) -> SurfaceClass {
        SurfaceClass {
            deg0: RatFunc::zero(),
            deg2: BTreeMap::new(),
            deg4: c,
        }
    }

    pub fn deg0(&self) -> &RatFunc {
        &self.deg0
    }

    pub fn deg4(&self) -> &RatFunc {
        &self.deg4
    }

    pub fn set_deg2(&mut self, g: Gen2, c: RatFunc) {
        if c.is_zero() {
            self.deg2.remove(&g);
        } else {
            self.deg2.insert(g, c);
        }
    }

    pub fn set_deg4(&mut self, c: RatFunc) {
        self.deg4 = c;
    }

    pub fn coeff(&self, g: Gen2) -> RatFunc {
        self.deg2.get(&g).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn deg2_terms(&self) -> impl Iterator<Item = (&Gen2, &RatFunc)> {
        self.deg2.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.deg0.is_zero() && self.deg2.is_empty() && self.deg4.is_zero()
    }

    pub fn scale(&self, c: &RatFunc) -> SurfaceClass {
        let mut out = SurfaceClass::zero();
        out.deg0 = &self.deg0 * c;
        for (g, k) in &self.deg2 {
            out.set_deg2(*g, k * c);
        }
        out.deg4 = &self.deg4 * c;
        out
    }

    pub fn add(&self, other: &SurfaceClass) -> SurfaceClass {
        let mut out = self.clone();
        out.deg0 = &out.deg0 + &other.deg0;
        for (g, k) in &other.deg2 {
            let cur = out.coeff(*g);
            out.set_deg2(*g, &cur + k);
        }
        out.deg4 = &out.deg4 + &other.deg4;
        out
    }

    pub fn sub(&self, other: &SurfaceClass) -> SurfaceClass {
        self.add(&other.scale(&rf(-1)))
    }

    /// Product in the truncated ring; degree-2 squares land on the point
    /// class through the pairing table, anything above degree 4 dies.
    pub fn mul(&self, other: &SurfaceClass, ctx: &PairingCtx) -> Result<SurfaceClass> {
        let mut out = SurfaceClass::zero();
        out.deg0 = &self.deg0 * &other.deg0;
        for (g, k) in &self.deg2 {
            let cur = out.coeff(*g);
            out.set_deg2(*g, &cur + &(k * &other.deg0));
        }
        for (g, k) in &other.deg2 {
            let cur = out.coeff(*g);
            out.set_deg2(*g, &cur + &(k * &self.deg0));
        }
        let mut deg4 = &(&self.deg0 * &other.deg4) + &(&self.deg4 * &other.deg0);
        for (g1, k1) in &self.deg2 {
            for (g2, k2) in &other.deg2 {
                deg4 = &deg4 + &(&(k1 * k2) * &ctx.pair(*g1, *g2)?);
            }
        }
        out.deg4 = deg4;
        Ok(out)
    }

    /// Intersection number of two degree-2 classes.
    pub fn pair(&self, other: &SurfaceClass, ctx: &PairingCtx) -> Result<RatFunc> {
        let mut acc = RatFunc::zero();
        for (g1, k1) in &self.deg2 {
            for (g2, k2) in &other.deg2 {
                acc = &acc + &(&(k1 * k2) * &ctx.pair(*g1, *g2)?);
            }
        }
        Ok(acc)
    }

    pub fn self_intersection(&self, ctx: &PairingCtx) -> Result<RatFunc> {
        self.pair(self, ctx)
    }

    /// Apply a rational substitution to every coefficient.
    pub fn substitute(&self, bindings: &[(Var, Rat)]) -> Result<SurfaceClass> {
        let mut out = SurfaceClass::zero();
        out.deg0 = self.deg0.substitute(bindings)?;
        for (g, k) in &self.deg2 {
            out.set_deg2(*g, k.substitute(bindings)?);
        }
        out.deg4 = self.deg4.substitute(bindings)?;
        Ok(out)
    }

    /// Exchange one degree-2 generator for a whole class (e.g. `delta -> -3 sigma`).
    pub fn replace_gen(&self, g: Gen2, image: &SurfaceClass) -> SurfaceClass {
        let mut out = self.clone();
        let c = out.coeff(g);
        if c.is_zero() {
            return out;
        }
        out.set_deg2(g, RatFunc::zero());
        out.add(&image.scale(&c))
    }
}

impl fmt::Display for SurfaceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.deg0.is_zero() {
            parts.push(format!("{}", self.deg0));
        }
        for (g, c) in &self.deg2 {
            if c.is_one() {
                parts.push(format!("{}", g.name()));
            } else {
                parts.push(format!("({})*{}", c, g.name()));
            }
        }
        if !self.deg4.is_zero() {
            parts.push(format!("({})*[pt]", self.deg4));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Pairing data of the probe cycle after pulling back along the fiberwise
/// inversion of a surface with a section. All three pairings are recomputed
/// from the expansion `i*S = -S + 2[(s.S)+(pg+1)(f.S)] f + 2 (f.S) s` and
/// come out unchanged.
pub fn involution_pairings(
    f_s: &RatFunc,
    s_s: &RatFunc,
    s2: &RatFunc,
    pg: &RatFunc,
) -> (RatFunc, RatFunc, RatFunc) {
    let chi = pg + &rf(1);
    let a = &rf(2) * &(s_s + &(&chi * f_s));
    let b = &rf(2) * f_s;
    // f.(iS) = -fS + b (f.s) ; s.(iS) = -sS + a + b s^2 ; (iS)^2 expanded.
    let new_fs = &-f_s + &b;
    let new_ss = &(&-s_s + &a) + &(&b * &-&chi);
    let new_s2 = {
        let cross_f = &(&rf(-2) * &a) * f_s;
        let cross_s = &(&rf(-2) * &b) * s_s;
        let ab = &(&rf(2) * &a) * &b;
        let bb = &(&b * &b) * &-&chi;
        &(&(&(s2 + &cross_f) + &cross_s) + &ab) + &bb
    };
    (new_fs, new_ss, new_s2)
}

/// The fiberwise inversion acting on classes over `{f, sigma, S}` on a
/// surface with a section: fixes `f` and `sigma`, sends the probe cycle to
/// `-S + 2[(s.S)+(pg+1)(f.S)] f + 2 (f.S) sigma`.
pub fn involution_pullback_class(class: &SurfaceClass, pg: &RatFunc) -> SurfaceClass {
    let chi = pg + &rf(1);
    let f_coef = &rf(2) * &(&v(Var::Ss) + &(&chi * &v(Var::Fs)));
    let s_coef = &rf(2) * &v(Var::Fs);
    let mut image = SurfaceClass::gen2(Gen2::PhiCycle).scale(&rf(-1));
    image = image.add(&SurfaceClass::gen2(Gen2::F).scale(&f_coef));
    image = image.add(&SurfaceClass::gen2(Gen2::Sigma).scale(&s_coef));
    class.replace_gen(Gen2::PhiCycle, &image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn section_ctx() -> PairingCtx {
        EllipticSurface::with_section().pairing_ctx(v(Var::E))
    }

    #[test]
    fn canonical_class_examples() {
        // K3-like: pg = 1, m = 1 gives 0.
        let s = EllipticSurface::numeric(1, 1, 1).unwrap();
        assert!(s.canonical_kappa_coefficient().is_zero());
        // With a section: (pg - 1) f.
        let s = EllipticSurface::with_section();
        assert_eq!(s.canonical_kappa_coefficient(), &v(Var::Pg) - &rf(1));
        // pg = 0, m1 = 3, m2 = 1: coefficient -1.
        let s = EllipticSurface::numeric(0, 3, 1).unwrap();
        assert_eq!(s.canonical_kappa_coefficient(), rf(-1));
    }

    #[test]
    fn todd_class_cases() {
        let s = EllipticSurface::with_section();
        assert_eq!(s.todd_fiber_coefficient(), &rf(1) - &v(Var::Pg));
        let s = EllipticSurface::symbolic();
        let expected = &(&-&(&v(Var::Pg) + &rf(1)) + &(&rf(1) / &v(Var::M1)))
            + &(&rf(1) / &v(Var::M2));
        assert_eq!(s.todd_fiber_coefficient(), expected);
        let s = EllipticSurface::numeric(0, 1, 1).unwrap();
        let t = s.todd_class();
        assert_eq!(t.coeff(Gen2::F), RatFunc::from_ratio(1, 2));
        assert_eq!(*t.deg4(), rf(1));
    }

    #[test]
    fn todd_degree_four_integrates_to_chi() {
        let s = EllipticSurface::symbolic();
        assert_eq!(*s.todd_class().deg4(), s.chi());
    }

    #[test]
    fn moduli_dimension_reference_points() {
        let s = EllipticSurface::with_section();
        let three_chi = &rf(3) * &s.chi();
        assert!(moduli_dimension(&-&three_chi, &s).is_zero());
        assert_eq!(moduli_dimension(&(&-&three_chi - &rf(2)), &s), rf(2));
    }

    #[test]
    fn dim_parity_solves_and_rejects() {
        assert_eq!(dim_parity(-12, 3).unwrap(), 0);
        assert_eq!(dim_parity(-14, 3).unwrap(), 1);
        assert!(matches!(
            dim_parity(-13, 3),
            Err(EngineError::ParityViolation(_))
        ));
    }

    #[test]
    fn c2_of_reference_bundle() {
        let s = EllipticSurface::with_section();
        // delta = -3 sigma: delta^2 = -9(pg+1), c = -(3/2)(pg+1).
        let delta_sq = &rf(-9) * &s.chi();
        assert_eq!(c2_of_v0(&s, &delta_sq), &RatFunc::from_ratio(-3, 2) * &s.chi());
        // delta^2 = -3(pg+1) makes the numerator vanish.
        let delta_sq = &rf(-3) * &s.chi();
        assert!(c2_of_v0(&s, &delta_sq).is_zero());
        // pg = 1, delta^2 = 2: c = 2.
        let s = EllipticSurface::numeric(1, 1, 1).unwrap();
        assert_eq!(c2_of_v0(&s, &rf(2)), rf(2));
    }

    #[test]
    fn cohomology_table_matches_riemann_roch() {
        for a in -3..=4 {
            let (h0, h1, h2) = coh_dims_section_case(a);
            assert_eq!(h0, 0);
            let chi = coh_chi_riemann_roch(a, &v(Var::Pg));
            assert_eq!(chi, rf(a - 1), "chi at twist {a}");
            assert_eq!(rf(h0 - h1 + h2), chi, "h0-h1+h2 at twist {a}");
        }
        assert_eq!(coh_dims_section_case(0), (0, 1, 0));
        assert_eq!(coh_dims_section_case(2), (0, 0, 1));
        assert_eq!(coh_dims_section_case(1), (0, 0, 0));
    }

    #[test]
    fn suitability_cases() {
        let data = SuitabilityData {
            f_dot_delta: int(1),
            l_dot_delta: int(1),
            c: int(10),
        };
        // f.(2D - Delta) = 0 passes.
        let pass_zero = DivisorPairings {
            f_dot_d: rat(1, 2),
            l_dot_d: int(4),
            d_sq: int(0),
            d_dot_delta: int(0),
        };
        assert!(suitability_check(&data, &pass_zero));
        // Matching signs pass: f.(2D-Delta) = 3, L.(2D-Delta) = 5.
        let pass_sign = DivisorPairings {
            f_dot_d: int(2),
            l_dot_d: int(3),
            d_sq: int(0),
            d_dot_delta: int(0),
        };
        assert!(suitability_check(&data, &pass_sign));
        // Mismatched signs fail: f.(2D-Delta) = 3, L.(2D-Delta) = -1.
        let fail = DivisorPairings {
            f_dot_d: int(2),
            l_dot_d: int(0),
            d_sq: int(0),
            d_dot_delta: int(0),
        };
        assert!(!suitability_check(&data, &fail));
        // Outside the instanton bound the condition is vacuous.
        let out_of_bound = DivisorPairings {
            f_dot_d: int(2),
            l_dot_d: int(0),
            d_sq: int(-100),
            d_dot_delta: int(0),
        };
        assert!(suitability_check(&data, &out_of_bound));
    }

    #[test]
    fn pairing_table_symmetry() {
        let ctx = EllipticSurface::symbolic().symbolic_cover().pairing_ctx(v(Var::E));
        for a in Gen2::ALL {
            for b in Gen2::ALL {
                match (ctx.pair(a, b), ctx.pair(b, a)) {
                    (Ok(x), Ok(y)) => assert_eq!(x, y, "{} . {}", a.name(), b.name()),
                    (Err(_), Err(_)) => {}
                    _ => panic!("asymmetric domain for {} . {}", a.name(), b.name()),
                }
            }
        }
    }

    #[test]
    fn kappa_relation_and_fiber_square() {
        let s = EllipticSurface::symbolic();
        let ctx = s.pairing_ctx(v(Var::E));
        // f = m1 m2 kappa pairs identically against every generator in the table.
        let f = SurfaceClass::gen2(Gen2::F);
        let kappa_scaled = SurfaceClass::gen2(Gen2::Kappa).scale(&(&s.m1 * &s.m2));
        for g in [Gen2::Sigma, Gen2::Delta, Gen2::Cycle] {
            let lhs = f.pair(&SurfaceClass::gen2(g), &ctx).unwrap();
            let rhs = kappa_scaled.pair(&SurfaceClass::gen2(g), &ctx).unwrap();
            assert_eq!(lhs, rhs, "kappa relation against {}", g.name());
        }
        assert!(f.self_intersection(&ctx).unwrap().is_zero());
    }

    #[test]
    fn section_self_intersection_on_cover() {
        let ctx = EllipticSurface::symbolic().symbolic_cover().pairing_ctx(v(Var::E));
        let sigma = SurfaceClass::gen2(Gen2::Sigma);
        let expected = &-&v(Var::D) * &(&v(Var::Pg) + &rf(1));
        assert_eq!(sigma.self_intersection(&ctx).unwrap(), expected);
    }

    #[test]
    fn involution_preserves_pairings() {
        let (fs, ss, s2) = involution_pairings(&v(Var::Fs), &v(Var::Ss), &v(Var::S2), &v(Var::Pg));
        assert_eq!(fs, v(Var::Fs));
        assert_eq!(ss, v(Var::Ss));
        assert_eq!(s2, v(Var::S2));
    }

    #[test]
    fn involution_is_an_involution_on_classes() {
        let class = SurfaceClass::gen2(Gen2::PhiCycle)
            .add(&SurfaceClass::gen2(Gen2::F).scale(&rf(7)))
            .add(&SurfaceClass::gen2(Gen2::Sigma).scale(&rf(-2)));
        let once = involution_pullback_class(&class, &v(Var::Pg));
        let twice = involution_pullback_class(&once, &v(Var::Pg));
        assert_eq!(twice, class);
    }

    #[test]
    fn involution_fixes_fiber_and_section() {
        let f = SurfaceClass::gen2(Gen2::F);
        assert_eq!(involution_pullback_class(&f, &v(Var::Pg)), f);
        // The section is fixed: substituting sigma's pairing data into the
        // expansion returns sigma itself. On pairing data: s.s = -(pg+1),
        // f.s = 1, s^2 = -(pg+1).
        let chi = &v(Var::Pg) + &rf(1);
        let (fs, ss, s2) = involution_pairings(&rf(1), &-&chi, &-&chi, &v(Var::Pg));
        assert_eq!(fs, rf(1));
        assert_eq!(ss, -&chi);
        assert_eq!(s2, -&chi);
    }
}
