//! Text input: rationals, eigenvalue parameters and the residue-case table.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use spectral_moore_core::feasibility::{Case2, Case3, Table7, Table7Row};
use spectral_moore_core::theta::Theta;

/// Table of admissible diameters shipped with the binary.
pub const TABLE7_JSON: &str = include_str!("../data/table7.json");

/// Parses `7`, `-3/2` or `1.25` exactly.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("not a rational number: `{}`", s);
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(format!("zero denominator in `{}`", s));
        }
        return Ok(BigRational::new(n, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{}{}", int, frac);
    let n: BigInt = digits.parse().map_err(|_| bad())?;
    let scale: BigInt = Pow::pow(BigInt::from(10), frac.len());
    let q = BigRational::new(n, scale);
    Ok(if neg { -q } else { q })
}

/// Parses a rational, `sqrt(q)` or `-sqrt(q)`; all forms are exact.
pub fn parse_theta(s: &str) -> Result<Theta, String> {
    let t = s.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, t),
    };
    if let Some(inner) = body.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
        let sq = parse_rational(inner)?;
        if sq < BigRational::zero() {
            return Err(format!("negative square in `{}`", s));
        }
        let th = Theta::from_square(sq);
        return Ok(if neg { th.negated() } else { th });
    }
    parse_rational(t).map(Theta::from_rational)
}

/// `theta` from either a literal or an exact square.
pub fn theta_from_args(theta: Option<&str>, exact_sq: Option<&str>) -> Result<Theta, String> {
    match (theta, exact_sq) {
        (Some(_), Some(_)) => Err("give either --theta or --exact-theta-sq, not both".into()),
        (Some(t), None) => parse_theta(t),
        (None, Some(s)) => {
            let sq = parse_rational(s)?;
            if sq < BigRational::zero() {
                return Err(format!("negative square `{}`", s));
            }
            Ok(Theta::from_square(sq))
        }
        (None, None) => Err("missing --theta or --exact-theta-sq".into()),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table7File {
    pub rows: Vec<Table7FileRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table7FileRow {
    pub case2: String,
    pub case3: Vec<String>,
    pub d: Vec<usize>,
}

impl Table7File {
    pub fn to_table(&self) -> Result<Table7, String> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let case2 = Case2::parse(&r.case2).ok_or_else(|| format!("bad mod-2 case `{}`", r.case2))?;
                let case3 = r
                    .case3
                    .iter()
                    .map(|c| Case3::parse(c).ok_or_else(|| format!("bad mod-3 case `{}`", c)))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Table7Row {
                    case2,
                    case3,
                    d: r.d.clone(),
                })
            })
            .collect::<Result<Vec<_>, String>>()?;
        Ok(Table7::new(rows))
    }

    pub fn from_table(t: &Table7) -> Self {
        Self {
            rows: t
                .rows
                .iter()
                .map(|r| Table7FileRow {
                    case2: r.case2.to_string(),
                    case3: r.case3.iter().map(|c| c.to_string()).collect(),
                    d: r.d.clone(),
                })
                .collect(),
        }
    }
}

pub fn parse_table7(json: &str) -> Result<Table7, String> {
    let file: Table7File = serde_json::from_str(json).map_err(|e| format!("table7: {}", e))?;
    file.to_table()
}

/// The embedded table, or the one at `path`.
pub fn load_table7(path: Option<&Path>) -> Result<Table7, String> {
    match path {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| format!("{}: {}", p.display(), e))?;
            parse_table7(&text)
        }
        None => parse_table7(TABLE7_JSON),
    }
}

/// Exact text of a rational, as `n` or `n/d`.
pub fn rational_text(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use spectral_moore_core::poly::{rat, ratio};

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/2").unwrap(), ratio(3, 2));
        assert_eq!(parse_rational("-1.25").unwrap(), ratio(-5, 4));
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational(".5").unwrap(), ratio(1, 2));
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn thetas() {
        let t = parse_theta("sqrt(2)").unwrap();
        assert_eq!(t.square(), Some(&rat(2)));
        assert!(parse_theta("-sqrt(3/2)").unwrap().is_negative());
        assert_eq!(parse_theta("sqrt(9/4)").unwrap().rational(), Some(&ratio(3, 2)));
        assert_eq!(parse_theta("1").unwrap().rational(), Some(&rat(1)));
        assert!(theta_from_args(None, None).is_err());
        assert_eq!(theta_from_args(None, Some("2")).unwrap(), parse_theta("sqrt(2)").unwrap());
    }

    #[test]
    fn embedded_table_matches_builtin() {
        assert_eq!(load_table7(None).unwrap(), Table7::builtin());
        let round = Table7File::from_table(&Table7::builtin()).to_table().unwrap();
        assert_eq!(round, Table7::builtin());
    }
}
