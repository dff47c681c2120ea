//! Text rendering for series and floats.

use grpdcard::RationalSeries;
use num_traits::{One, Zero};

/// `"1 + x + x^2 + 2/3 x^3"`, skipping zero coefficients and the factor 1.
pub fn render_series(s: &RationalSeries) -> String {
    let mut terms = Vec::new();
    for (n, c) in s.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = match n {
            0 => c.to_string(),
            1 if c.is_one() => "x".to_string(),
            1 => format!("{c} x"),
            _ if c.is_one() => format!("x^{n}"),
            _ => format!("{c} x^{n}"),
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Scientific notation with 15 significant digits.
pub fn float15(x: f64) -> String {
    format!("{x:.14e}")
}
