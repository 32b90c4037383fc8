//! Locale-independent rendering of scalars to a fixed number of significant
//! digits.
//!
//! The output is always re-parseable as a float: positional notation with a
//! `.` decimal point for moderate magnitudes, `<mantissa>e<exp>` otherwise,
//! trailing zeros trimmed. Non-finite values render as `nan`, `inf`, `-inf`.

/// Formats `value` with `digits` significant digits (clamped to `1..=17`).
///
/// Magnitudes whose decimal exponent falls in `[-4, digits)` are rendered
/// positionally, everything else in scientific notation, mirroring the
/// classic `%g` behaviour.
pub fn significant(value: f64, digits: usize) -> String {
    let digits = digits.clamp(1, 17);
    if value.is_nan() {
        return "nan".to_string();
    }
    if value.is_infinite() {
        return if value > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if value == 0.0 {
        return "0".to_string();
    }

    let sci = format!("{:.*e}", digits - 1, value);
    let (mantissa, exp_str) = sci.split_once('e').expect("float in scientific notation");
    let exp: i32 = exp_str.parse().expect("valid exponent");
    let sign = if mantissa.starts_with('-') { "-" } else { "" };
    let digit_run: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();

    if exp < -4 || exp >= digits as i32 {
        let trimmed = trim_fraction(mantissa);
        return format!("{trimmed}e{exp}");
    }

    if exp >= 0 {
        let point = exp as usize + 1;
        if point >= digit_run.len() {
            let padded = format!("{}{}", digit_run, "0".repeat(point - digit_run.len()));
            return format!("{sign}{padded}");
        }
        let frac = digit_run[point..].trim_end_matches('0');
        if frac.is_empty() {
            return format!("{sign}{}", &digit_run[..point]);
        }
        return format!("{sign}{}.{frac}", &digit_run[..point]);
    }

    // exp in [-4, -1]: leading zeros after the decimal point.
    let zeros = "0".repeat((-exp - 1) as usize);
    let body = format!("{zeros}{digit_run}");
    let body = body.trim_end_matches('0');
    format!("{sign}0.{body}")
}

fn trim_fraction(mantissa: &str) -> &str {
    if !mantissa.contains('.') {
        return mantissa;
    }
    mantissa.trim_end_matches('0').trim_end_matches('.')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integral_values_drop_the_fraction() {
        assert_eq!(significant(9.0, 12), "9");
        assert_eq!(significant(-4.0, 12), "-4");
        assert_eq!(significant(120.0, 4), "120");
    }

    #[test]
    fn twelve_digit_defaults_match_reference_values() {
        assert_eq!(significant(1.0f64.sin(), 12), "0.841470984808");
        assert_eq!(significant(1.3817732906760363, 12), "1.38177329068");
    }

    #[test]
    fn zero_is_unsigned() {
        assert_eq!(significant(0.0, 12), "0");
        assert_eq!(significant(-0.0, 12), "0");
    }

    #[test]
    fn small_magnitudes_switch_to_scientific() {
        assert_eq!(significant(0.0015, 12), "0.0015");
        assert_eq!(significant(1.5e-9, 12), "1.5e-9");
        assert_eq!(significant(-2.5e-7, 6), "-2.5e-7");
    }

    #[test]
    fn large_magnitudes_switch_to_scientific() {
        assert_eq!(significant(1.0e16, 12), "1e16");
        assert_eq!(significant(123456789012345.0, 12), "1.23456789012e14");
        assert_eq!(significant(123.456, 12), "123.456");
    }

    #[test]
    fn non_finite_values_have_fixed_spellings() {
        assert_eq!(significant(f64::NAN, 12), "nan");
        assert_eq!(significant(f64::INFINITY, 12), "inf");
        assert_eq!(significant(f64::NEG_INFINITY, 12), "-inf");
    }

    #[test]
    fn digit_count_controls_rounding() {
        assert_eq!(significant(std::f64::consts::PI, 4), "3.142");
        assert_eq!(significant(std::f64::consts::PI, 12), "3.14159265359");
    }

    #[test]
    fn output_reparses_to_the_displayed_precision() {
        for &v in &[1.0f64.sin(), 1.38177329068e2, -7.25e-13, 6.0221408e23] {
            let shown = significant(v, 12);
            let back: f64 = shown.parse().expect("re-parseable");
            assert!((back - v).abs() <= v.abs() * 1e-11);
        }
    }
}
