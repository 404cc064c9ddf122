//! Real roots of low-degree polynomials in closed form.

/// Real roots of `a x^3 + b x^2 + c x + d`, ascending. Three-real-root
/// cases use the trigonometric form, the one-real-root case Cardano's
/// formula; each root gets a couple of Newton steps to wash out cancellation.
/// Near-zero leading coefficients degrade gracefully to the quadratic and
/// linear cases.
pub fn real_cubic_roots(a: f64, b: f64, c: f64, d: f64) -> Vec<f64> {
    let scale = a.abs().max(b.abs()).max(c.abs()).max(d.abs());
    if scale == 0.0 {
        return Vec::new(); // identically zero: no isolated roots
    }
    if a.abs() <= 1e-14 * scale {
        return real_quadratic_roots(b, c, d);
    }

    // depressed form: x = t - b/(3a), t^3 + p t + q = 0
    let shift = -b / (3.0 * a);
    let p = (3.0 * a * c - b * b) / (3.0 * a * a);
    let q = (2.0 * b * b * b - 9.0 * a * b * c + 27.0 * a * a * d) / (27.0 * a * a * a);
    let discriminant = (q / 2.0) * (q / 2.0) + (p / 3.0) * (p / 3.0) * (p / 3.0);

    let mut roots = if discriminant > 0.0 {
        // one real root
        let s = discriminant.sqrt();
        let t = (-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt();
        vec![t + shift]
    } else if p.abs() < 1e-300 {
        // triple root
        vec![shift; 3]
    } else {
        // three real roots (trigonometric form)
        let m = 2.0 * (-p / 3.0).sqrt();
        let arg = (3.0 * q / (p * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        let mut ts: Vec<f64> = (0..3)
            .map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() + shift)
            .collect();
        ts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        ts
    };

    for r in roots.iter_mut() {
        *r = polish(*r, a, b, c, d);
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

/// Real roots of `a x^2 + b x + c`, ascending.
pub fn real_quadratic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let scale = a.abs().max(b.abs()).max(c.abs());
    if scale == 0.0 {
        return Vec::new();
    }
    if a.abs() <= 1e-14 * scale {
        if b == 0.0 {
            return Vec::new();
        }
        return vec![-c / b];
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Vec::new();
    }
    // the stable root first, its cofactor second
    let s = disc.sqrt();
    let q = -0.5 * (b + s.copysign(b));
    let (r1, r2) = if q == 0.0 { (0.0, 0.0) } else { (q / a, c / q) };
    let mut roots = vec![r1, r2];
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

fn polish(x0: f64, a: f64, b: f64, c: f64, d: f64) -> f64 {
    let mut x = x0;
    for _ in 0..2 {
        let f = ((a * x + b) * x + c) * x + d;
        let df = (3.0 * a * x + 2.0 * b) * x + c;
        if df.abs() < 1e-300 {
            break;
        }
        let step = f / df;
        if !step.is_finite() {
            break;
        }
        x -= step;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_roots(actual: &[f64], expected: &[f64]) {
        assert_eq!(actual.len(), expected.len(), "{actual:?} vs {expected:?}");
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() < 1e-10, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn three_distinct_roots() {
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        assert_roots(&real_cubic_roots(1.0, -6.0, 11.0, -6.0), &[1.0, 2.0, 3.0]);
        // (x+1)(x)(x-2) = x^3 - x^2 - 2x
        assert_roots(&real_cubic_roots(1.0, -1.0, -2.0, 0.0), &[-1.0, 0.0, 2.0]);
    }

    #[test]
    fn repeated_and_triple_roots() {
        // (x-2)^2 (x-1)
        let roots = real_cubic_roots(1.0, -5.0, 8.0, -4.0);
        assert_eq!(roots.len(), 3);
        assert!((roots[0] - 1.0).abs() < 1e-8);
        assert!((roots[1] - 2.0).abs() < 1e-6 && (roots[2] - 2.0).abs() < 1e-6);
        // (x-3)^3
        let roots = real_cubic_roots(1.0, -9.0, 27.0, -27.0);
        assert!(roots.iter().all(|r| (r - 3.0).abs() < 1e-4));
    }

    #[test]
    fn single_real_root() {
        // x^3 + 1: only real root is -1
        assert_roots(&real_cubic_roots(1.0, 0.0, 0.0, 1.0), &[-1.0]);
    }

    #[test]
    fn degenerate_leading_coefficients() {
        assert_roots(&real_cubic_roots(0.0, 1.0, -3.0, 2.0), &[1.0, 2.0]);
        assert_roots(&real_quadratic_roots(0.0, 2.0, -4.0), &[2.0]);
        assert!(real_quadratic_roots(1.0, 0.0, 1.0).is_empty());
    }

    #[test]
    fn scaled_coefficients_stay_accurate() {
        // 1e8 * (x - 1e-3)(x + 5)(x - 40)
        let (r1, r2, r3) = (1e-3, -5.0, 40.0);
        let a = 1e8;
        let b = -a * (r1 + r2 + r3);
        let c = a * (r1 * r2 + r1 * r3 + r2 * r3);
        let d = -a * r1 * r2 * r3;
        let roots = real_cubic_roots(a, b, c, d);
        assert_roots(&roots, &[-5.0, 1e-3, 40.0]);
    }
}
