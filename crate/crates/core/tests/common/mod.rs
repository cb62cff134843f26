#![allow(clippy::excessive_precision)]

//! Test-only numerical helpers, independent of the library code paths.

#![allow(dead_code)]

// Gauss–Kronrod 7/15 nodes on [-1, 1] (positive half, centre last).
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5 and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for k in 0..7 {
        let dx = h * XGK[k];
        let pair = f(c - dx) + f(c + dx);
        kronrod += WGK[k] * pair;
        if k % 2 == 1 {
            gauss += WG[k / 2] * pair;
        }
    }
    (kronrod * h, ((kronrod - gauss) * h).abs())
}

/// Adaptive Gauss–Kronrod quadrature of `f` on `[a, b]` to absolute
/// tolerance `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    fn recurse<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32) -> f64 {
        let (val, err) = gk15(f, a, b);
        if err <= tol || depth == 0 {
            return val;
        }
        let m = 0.5 * (a + b);
        recurse(f, a, m, 0.5 * tol, depth - 1) + recurse(f, m, b, 0.5 * tol, depth - 1)
    }
    // pre-split so oscillatory integrands are resolved from the start
    let pieces = 64;
    let w = (b - a) / pieces as f64;
    (0..pieces)
        .map(|i| recurse(&f, a + i as f64 * w, a + (i + 1) as f64 * w, tol / pieces as f64, 40))
        .sum()
}

/// Root of `f` in `[a, b]` given a sign change, by bisection.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64) -> f64 {
    let mut fa = f(a);
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 || (b - a) < 1e-15 {
            return m;
        }
        if (fa < 0.0) == (fm < 0.0) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Time-dependent decay rates written out independently of the library.
pub fn rates(omega: f64, lambda: f64, t: f64) -> (f64, f64) {
    let gm = 1.0 - (-lambda * t).exp();
    let k = lambda * lambda / (4.0 * omega * omega + lambda * lambda);
    let gp = k
        * (1.0
            + ((2.0 * omega / lambda) * (2.0 * omega * t).sin() - (2.0 * omega * t).cos())
                * (-lambda * t).exp());
    (gp, gm)
}

#[test]
fn quadrature_self_check() {
    let v = integrate(|x: f64| x.sin(), 0.0, std::f64::consts::PI, 1e-13);
    assert!((v - 2.0).abs() < 1e-12);
    let v = integrate(|x: f64| (40.0 * x).cos(), 0.0, 10.0, 1e-13);
    assert!((v - (400.0f64).sin() / 40.0).abs() < 1e-12);
}
