//! Monomial strings over `x`, `y`, `z` for rings of dimension at most 3.
//!
//! `"x^2y^4"`, `"x^{12}y^7z"`, `"x*y^-1"` and `"1"` are accepted; exponents of
//! a repeated variable add up.

use num_bigint::BigInt;
use toricmult::LatticePoint;

const VARS: [char; 3] = ['x', 'y', 'z'];

pub fn parse(s: &str, dim: usize) -> Result<LatticePoint, String> {
    if dim == 0 || dim > VARS.len() {
        return Err(format!("monomial strings need dimension 1 to 3, the ring has dimension {dim}"));
    }
    let mut coords = vec![BigInt::from(0); dim];
    let compact: String = s.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if compact == "1" {
        return Ok(LatticePoint::new(coords));
    }
    if compact.is_empty() {
        return Err("empty monomial".into());
    }
    let chars: Vec<char> = compact.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let var = chars[i];
        let k = VARS[..dim]
            .iter()
            .position(|&v| v == var)
            .ok_or_else(|| format!("unexpected {var:?} in monomial {s:?}"))?;
        i += 1;
        let mut exponent = BigInt::from(1);
        if i < chars.len() && chars[i] == '^' {
            i += 1;
            let braced = i < chars.len() && chars[i] == '{';
            if braced {
                i += 1;
            }
            let start = i;
            if i < chars.len() && chars[i] == '-' {
                i += 1;
            }
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            exponent = digits.parse().map_err(|_| format!("bad exponent in monomial {s:?}"))?;
            if braced {
                if i >= chars.len() || chars[i] != '}' {
                    return Err(format!("unclosed brace in monomial {s:?}"));
                }
                i += 1;
            }
        }
        coords[k] += exponent;
    }
    Ok(LatticePoint::new(coords))
}

/// `None` for dimensions above 3.
pub fn render(w: &LatticePoint) -> Option<String> {
    if w.dim() == 0 || w.dim() > VARS.len() {
        return None;
    }
    if w.is_zero() {
        return Some("1".into());
    }
    let mut out = String::new();
    for (c, v) in w.coords().iter().zip(VARS) {
        if *c == BigInt::from(0) {
            continue;
        }
        out.push(v);
        if *c != BigInt::from(1) {
            out.push('^');
            out.push_str(&c.to_string());
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn superscript_notation() {
        assert_eq!(parse("x^2y^4", 3).unwrap(), LatticePoint::from([2, 4, 0]));
        assert_eq!(parse("x^2y^4", 2).unwrap(), LatticePoint::from([2, 4]));
        assert_eq!(parse("x^{10}y^6z^2", 3).unwrap(), LatticePoint::from([10, 6, 2]));
        assert_eq!(parse("x^17 y^11 z", 3).unwrap(), LatticePoint::from([17, 11, 1]));
        assert_eq!(parse("1", 2).unwrap(), LatticePoint::from([0, 0]));
        assert_eq!(parse("x*x*y^-1", 2).unwrap(), LatticePoint::from([2, -1]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse("z", 2).is_err());
        assert!(parse("x^", 2).is_err());
        assert!(parse("x^{2", 2).is_err());
        assert!(parse("", 2).is_err());
        assert!(parse("x", 4).is_err());
    }

    #[test]
    fn renders() {
        assert_eq!(render(&LatticePoint::from([17, 11, 1])).unwrap(), "x^17y^11z");
        assert_eq!(render(&LatticePoint::from([0, -2])).unwrap(), "y^-2");
        assert_eq!(render(&LatticePoint::from([0, 0, 0])).unwrap(), "1");
        assert_eq!(render(&LatticePoint::from([1, 1, 1, 1])), None);
    }
}
