//! Gamma function and friends on the real line.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_741_8;

/// ζ(2), ζ(3), ..., ζ(25).
const ZETA: [f64; 24] = [
    1.644_934_066_848_226_4,
    1.202_056_903_159_594_3,
    1.082_323_233_711_138_2,
    1.036_927_755_143_369_9,
    1.017_343_061_984_449_1,
    1.008_349_277_381_922_8,
    1.004_077_356_197_944_3,
    1.002_008_392_826_082_2,
    1.000_994_575_127_818_1,
    1.000_494_188_604_119_5,
    1.000_246_086_553_308_0,
    1.000_122_713_347_578_5,
    1.000_061_248_135_058_7,
    1.000_030_588_236_307_0,
    1.000_015_282_259_408_7,
    1.000_007_637_197_637_9,
    1.000_003_817_293_265_0,
    1.000_001_908_212_716_6,
    1.000_000_953_962_033_9,
    1.000_000_476_932_986_8,
    1.000_000_238_450_502_7,
    1.000_000_119_219_926_0,
    1.000_000_059_608_189_1,
    1.000_000_029_803_503_5,
];

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// B_{2k} / (2k (2k-1)) for k = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// sin(πx), exact at integers and half-integers.
pub fn sin_pi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    // reduce to r in [-1, 1)
    let mut r = x % 2.0;
    if r >= 1.0 {
        r -= 2.0;
    } else if r < -1.0 {
        r += 2.0;
    }
    let (sign, r) = if r < 0.0 { (-1.0, -r) } else { (1.0, r) };
    // r in [0, 1]
    let r = if r > 0.5 { 1.0 - r } else { r };
    let v = if r == 0.0 {
        0.0
    } else if r == 0.5 {
        1.0
    } else if r <= 0.25 {
        (PI * r).sin()
    } else {
        (PI * (0.5 - r)).cos()
    };
    sign * v
}

/// cos(πx), exact at integers and half-integers.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// ln Γ(1 + z) for |z| <= 0.1 from its Taylor series in ζ values.
fn ln_gamma_1p_small(z: f64) -> f64 {
    let mut acc = 0.0;
    let mut pow = -z;
    for (i, zeta) in ZETA.iter().enumerate() {
        let k = (i + 2) as f64;
        pow *= -z;
        acc += zeta * pow / k;
        if pow.abs() < 1e-18 * acc.abs().max(f64::MIN_POSITIVE) {
            break;
        }
    }
    -EULER_GAMMA * z + acc
}

fn lanczos_gamma(x: f64) -> f64 {
    let z = x - 1.0;
    let mut a = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        a += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * a
}

fn stirling_ln_gamma(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    let mut p = inv;
    for c in STIRLING {
        corr += c * p;
        p *= inv2;
    }
    (x - 0.5) * x.ln() - x + HALF_LN_TWO_PI + corr
}

/// ln Γ(x) for finite x > 0, no validation.
pub(crate) fn ln_gamma_pos(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        // Γ(x) = Γ(1 + x) / x
        return ln_gamma_pos(x + 1.0) - x.ln();
    }
    if (x - 1.0).abs() <= 0.1 {
        return ln_gamma_1p_small(x - 1.0);
    }
    if (x - 2.0).abs() <= 0.1 {
        let z = x - 2.0;
        return z.ln_1p() + ln_gamma_1p_small(z);
    }
    if x >= 10.0 {
        return stirling_ln_gamma(x);
    }
    lanczos_gamma(x).ln()
}

/// ln Γ(x) for x > 0.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(format!(
            "log_gamma requires a finite positive argument, got {x}"
        )));
    }
    Ok(ln_gamma_pos(x))
}

/// Γ(x) on the real line. Returns NaN at the poles.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x <= 0.0 && x == x.floor() {
        return f64::NAN;
    }
    if x < 0.5 {
        return PI / (sin_pi(x) * gamma(1.0 - x));
    }
    if x <= 10.0 && (x - 1.0).abs() > 0.1 && (x - 2.0).abs() > 0.1 {
        return lanczos_gamma(x);
    }
    ln_gamma_pos(x).exp()
}

/// 1/Γ(x) for finite x, exactly zero at the poles of Γ.
pub fn reciprocal_gamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!(
            "reciprocal_gamma requires a finite argument, got {x}"
        )));
    }
    Ok(rgamma(x))
}

pub(crate) fn rgamma(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        return 0.0;
    }
    if x >= 0.5 {
        if x <= 10.0 && (x - 1.0).abs() > 0.1 && (x - 2.0).abs() > 0.1 {
            return 1.0 / lanczos_gamma(x);
        }
        return (-ln_gamma_pos(x)).exp();
    }
    // reflection: 1/Γ(x) = sin(πx) Γ(1-x) / π
    let s = sin_pi(x);
    let y = 1.0 - x;
    if y <= 10.0 {
        s * gamma(y) / PI
    } else {
        s.signum() * (ln_gamma_pos(y) + s.abs().ln() - PI.ln()).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    // extended-precision references
    const LN_GAMMA_REF: [(f64, f64); 20] = [
        (1e-06, 13.815_509_980_749_431_714_46),
        (0.001, 6.907_178_885_383_853_661_684),
        (0.1, 2.252_712_651_734_205_902_006),
        (0.5, 0.572_364_942_924_700_087_071_7),
        (0.999, 0.000_578_038_532_891_380_238_168_9),
        (1.001, -0.000_576_393_598_283_306_151_519_2),
        (1.5, -0.120_782_237_635_245_222_345_5),
        (1.9999, -0.000_042_275_208_772_153_458_011_34),
        (2.0001, 0.000_042_281_658_112_919_946_317_43),
        (2.5, 0.284_682_870_472_919_159_632_5),
        (3.3, 0.987_098_577_894_734_404_057_3),
        (4.0, 1.791_759_469_228_055_000_812),
        (7.25, 7.052_185_450_738_539_444_926),
        (10.0, 12.801_827_480_081_469_611_21),
        (12.5, 18.734_347_511_936_445_701_63),
        (33.3, 82.603_723_581_654_943_007_82),
        (57.5, 174.372_129_818_745_153_226_8),
        (100.0, 359.134_205_369_575_398_776),
        (150.5, 602.513_954_870_585_411_950_7),
        (170.0, 701.437_263_808_737_085_346_5),
    ];

    #[test]
    fn log_gamma_reference_points() {
        for (x, want) in LN_GAMMA_REF {
            let got = log_gamma(x).unwrap();
            let rel = ((got - want) / want).abs();
            assert!(rel <= 1e-13, "x={x}: got {got}, want {want}, rel {rel:e}");
        }
    }

    #[test]
    fn log_gamma_trivial_values() {
        assert_eq!(log_gamma(1.0).unwrap(), 0.0);
        assert_eq!(log_gamma(2.0).unwrap(), 0.0);
        assert_relative_eq!(log_gamma(0.5).unwrap(), 0.5 * PI.ln(), max_relative = 1e-15);
        assert_relative_eq!(log_gamma(4.0).unwrap(), 6f64.ln(), max_relative = 1e-15);
    }

    #[test]
    fn log_gamma_rejects_bad_input() {
        for x in [0.0, -1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(log_gamma(x), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn reciprocal_gamma_at_poles_is_zero() {
        for x in [0.0, -1.0, -2.0, -17.0] {
            assert_eq!(reciprocal_gamma(x).unwrap(), 0.0);
        }
        assert_eq!(reciprocal_gamma(1.0).unwrap(), 1.0);
        assert!(reciprocal_gamma(f64::NAN).is_err());
    }

    #[test]
    fn reciprocal_gamma_negative_half_integers() {
        // Γ(-1/2) = -2√π, Γ(-3/2) = 4√π/3
        let sp = PI.sqrt();
        assert_relative_eq!(
            reciprocal_gamma(-0.5).unwrap(),
            -1.0 / (2.0 * sp),
            max_relative = 1e-14
        );
        assert_relative_eq!(
            reciprocal_gamma(-1.5).unwrap(),
            3.0 / (4.0 * sp),
            max_relative = 1e-14
        );
    }

    #[test]
    fn gamma_matches_factorials() {
        let mut f = 1.0;
        for n in 1..30 {
            assert_relative_eq!(gamma(n as f64), f, max_relative = 1e-13);
            f *= n as f64;
        }
    }

    #[test]
    fn sin_pi_is_exact_at_lattice_points() {
        assert_eq!(sin_pi(3.0), 0.0);
        assert_eq!(sin_pi(-7.0), 0.0);
        assert_eq!(sin_pi(0.5), 1.0);
        assert_eq!(sin_pi(1.5), -1.0);
        assert_eq!(sin_pi(-0.5), -1.0);
        assert_eq!(cos_pi(1.0), -1.0);
        assert_relative_eq!(sin_pi(1.0 / 6.0), 0.5, max_relative = 1e-15);
    }

    proptest! {
        #[test]
        fn recurrence_holds(x in 0.05f64..160.0) {
            let lhs = ln_gamma_pos(x + 1.0);
            let rhs = ln_gamma_pos(x) + x.ln();
            prop_assert!((lhs - rhs).abs() <= 1e-13 * lhs.abs().max(1.0));
        }

        #[test]
        fn reflection_holds(x in -20.0f64..0.0) {
            prop_assume!((x - x.round()).abs() > 1e-3);
            let prod = rgamma(x) * rgamma(1.0 - x);
            let want = sin_pi(x) / PI;
            prop_assert!((prod - want).abs() <= 1e-12 * want.abs());
        }

        #[test]
        fn sin_pi_agrees_with_libm(x in -50.0f64..50.0) {
            prop_assert!((sin_pi(x) - (PI * x).sin()).abs() < 1e-13);
        }
    }
}
