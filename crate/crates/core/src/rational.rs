//! Exact rational helpers.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

/// Exact rational number used for weights, budgets and slopes.
pub type Rational = Ratio<i128>;

pub fn int(n: i128) -> Rational {
    Rational::from_integer(n)
}

pub fn floor_to_i128(q: &Rational) -> i128 {
    q.numer().div_floor(q.denom())
}

/// `"num/den"`, or a plain decimal integer when the denominator is one.
pub fn format(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `"p"`, `"p/q"`, or a terminating decimal such as `"1.25"`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i128 = n.trim().parse().ok()?;
        let d: i128 = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) || frac.len() > 30 {
            return None;
        }
        let negative = whole.starts_with('-');
        let w: i128 = if whole.is_empty() || whole == "-" {
            0
        } else {
            whole.parse().ok()?
        };
        let f: i128 = frac.parse().ok()?;
        let scale = 10i128.checked_pow(frac.len() as u32)?;
        let mag = Rational::new(w.abs() * scale + f, scale);
        return Some(if negative || w.is_negative() {
            -mag
        } else {
            mag
        });
    }
    s.parse::<i128>().ok().map(int)
}
