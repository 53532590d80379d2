//! Locale-independent number formatting for CSV and report output.

/// Formats `x` with 9 significant digits in the style of C's `%.9g`:
/// fixed notation for decimal exponents in `[-5, 9)`, scientific otherwise,
/// trailing zeros removed.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.8e}");
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("scientific format has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-5..9).contains(&exp) {
        let decimals = (8 - exp) as usize;
        trim_fraction(&format!("{x:.decimals$}")).to_string()
    } else {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_fraction(mantissa), exp.abs())
    }
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Fixed notation with `decimals` places.
pub fn fixed(x: f64, decimals: usize) -> String {
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig9(0.0), "0");
        assert_eq!(sig9(-0.0), "0");
        assert_eq!(sig9(1.0), "1");
        assert_eq!(sig9(0.5), "0.5");
        assert_eq!(sig9(1.0 / 3.0), "0.333333333");
        assert_eq!(sig9(2.0 / 3.0), "0.666666667");
        assert_eq!(sig9(0.796812472), "0.796812472");
        assert_eq!(sig9(123.456), "123.456");
        assert_eq!(sig9(1e-6), "1e-06");
        assert_eq!(sig9(1.5e-9), "1.5e-09");
        assert_eq!(sig9(0.0001234), "0.0001234");
        assert_eq!(sig9(1e9), "1e+09");
        assert_eq!(sig9(-2.5), "-2.5");
        assert_eq!(sig9(9.9999999996), "10");
        assert_eq!(sig9(100.0), "100");
    }

    #[test]
    fn fixed_places() {
        assert_eq!(fixed(0.15343, 2), "0.15");
        assert_eq!(fixed(0.00252, 3), "0.003");
    }
}
