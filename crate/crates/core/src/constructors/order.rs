use std::fmt;

use crate::error::{Error, Result};
use crate::gf::prime_power_parts;
use crate::uset::arith::gcd;

/// Group families with closed-form orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupFamily {
    /// PSL(n, q)
    Psl {
        n: u32,
        q: u64,
    },
    /// PSU(n, q), written Un(q)
    Psu {
        n: u32,
        q: u64,
    },
    /// PSp(2m, q)
    Psp {
        dim: u32,
        q: u64,
    },
    Alt(u32),
    Sym(u32),
    /// The Mathieu group M11.
    M11,
}

impl GroupFamily {
    /// Parses the common spellings: `PSL(2,11)`, `L2(11)`, `PSU(3,3)`,
    /// `U3(3)`, `PSp(4,3)`, `A5`, `Alt(5)`, `S4`, `Sym(4)`, `M11`.
    /// Whitespace, underscores and braces are ignored, and a field size may
    /// be written as a power (`L3(2^2)`).
    pub fn parse(name: &str) -> Result<Self> {
        let s: String = name
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, '_' | '{' | '}'))
            .collect();
        let unknown = || Error::InvalidParameters(format!("unrecognized group name {name:?}"));
        let num = |t: &str| -> Result<u64> {
            match t.split_once('^') {
                Some((b, e)) => {
                    let b: u64 = b.parse().map_err(|_| unknown())?;
                    let e: u32 = e.parse().map_err(|_| unknown())?;
                    b.checked_pow(e).ok_or_else(unknown)
                }
                None => t.parse().map_err(|_| unknown()),
            }
        };
        let args = |inner: &str| -> Result<(u32, u64)> {
            let (a, b) = inner.split_once(',').ok_or_else(unknown)?;
            Ok((num(a)? as u32, num(b)?))
        };
        let paren = |s: &str, prefix: &str| -> Option<String> {
            s.strip_prefix(prefix)
                .and_then(|r| r.strip_prefix('('))
                .and_then(|r| r.strip_suffix(')'))
                .map(str::to_string)
        };
        let upper = s.to_ascii_uppercase();
        if upper == "M11" {
            return Ok(Self::M11);
        }
        if let Some(inner) = paren(&upper, "PSL").or_else(|| paren(&upper, "SL")) {
            let (n, q) = args(&inner)?;
            return Ok(Self::Psl { n, q });
        }
        if let Some(inner) = paren(&upper, "PSU") {
            let (n, q) = args(&inner)?;
            return Ok(Self::Psu { n, q });
        }
        if let Some(inner) = paren(&upper, "PSP") {
            let (dim, q) = args(&inner)?;
            return Ok(Self::Psp { dim, q });
        }
        if let Some(inner) = paren(&upper, "ALT") {
            return Ok(Self::Alt(num(&inner)? as u32));
        }
        if let Some(inner) = paren(&upper, "SYM") {
            return Ok(Self::Sym(num(&inner)? as u32));
        }
        // Atlas style: L2(11), U3(3).
        for (prefix, unitary) in [("L", false), ("U", true)] {
            if let Some(rest) = upper.strip_prefix(prefix) {
                if let Some((n, tail)) = rest.split_once('(') {
                    if let (Ok(n), Some(q)) = (n.parse::<u32>(), tail.strip_suffix(')')) {
                        let q = num(q)?;
                        return Ok(if unitary {
                            Self::Psu { n, q }
                        } else {
                            Self::Psl { n, q }
                        });
                    }
                }
            }
        }
        if let Some(n) = upper.strip_prefix('A') {
            return Ok(Self::Alt(n.parse().map_err(|_| unknown())?));
        }
        if let Some(n) = upper.strip_prefix('S') {
            return Ok(Self::Sym(n.parse().map_err(|_| unknown())?));
        }
        Err(unknown())
    }

    /// Exact order.
    pub fn order(&self) -> Result<u64> {
        classical_order(*self)
    }
}

/// Canonical names: `PSL(n,q)`, `Un(q)`, `PSp(2m,q)`, `An`, `Sn`, `M11`.
impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Psl { n, q } => write!(f, "PSL({n},{q})"),
            Self::Psu { n, q } => write!(f, "U{n}({q})"),
            Self::Psp { dim, q } => write!(f, "PSp({dim},{q})"),
            Self::Alt(n) => write!(f, "A{n}"),
            Self::Sym(n) => write!(f, "S{n}"),
            Self::M11 => f.write_str("M11"),
        }
    }
}

fn checked_product(factors: impl IntoIterator<Item = u128>) -> Result<u128> {
    factors
        .into_iter()
        .try_fold(1u128, |acc, x| acc.checked_mul(x))
        .ok_or_else(|| Error::InvalidParameters("order overflows".into()))
}

fn to_u64(x: u128) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::InvalidParameters("order overflows u64".into()))
}

/// Closed-form group orders:
///
/// * PSL(n,q): `q^(n(n−1)/2) · Π_{i=2..n} (q^i − 1) / gcd(n, q−1)`
/// * PSU(n,q): `q^(n(n−1)/2) · Π_{i=2..n} (q^i − (−1)^i) / gcd(n, q+1)`
/// * PSp(2m,q): `q^(m²) · Π_{i=1..m} (q^(2i) − 1) / gcd(2, q−1)`
/// * A_n: `n!/2`, S_n: `n!`, M11: `11·10·9·8`
pub fn classical_order(family: GroupFamily) -> Result<u64> {
    let bad = |msg: &str| Err(Error::InvalidParameters(format!("{family}: {msg}")));
    match family {
        GroupFamily::Psl { n, q } | GroupFamily::Psu { n, q } => {
            if n < 2 {
                return bad("dimension must be at least 2");
            }
            if prime_power_parts(q).is_none() {
                return Err(Error::NotPrimePower(q));
            }
            let unitary = matches!(family, GroupFamily::Psu { .. });
            let qq = q as u128;
            let mut factors = vec![qq.checked_pow(n * (n - 1) / 2).unwrap_or(0)];
            for i in 2..=n {
                let qi = qq.checked_pow(i).unwrap_or(0);
                factors.push(if unitary && i % 2 == 1 {
                    qi + 1
                } else {
                    qi - 1
                });
            }
            if factors.contains(&0) {
                return bad("order overflows");
            }
            let num = checked_product(factors)?;
            let d = if unitary {
                gcd(n as u64, q + 1)
            } else {
                gcd(n as u64, q - 1)
            };
            to_u64(num / d as u128)
        }
        GroupFamily::Psp { dim, q } => {
            if dim < 2 || dim % 2 == 1 {
                return bad("dimension must be even and at least 2");
            }
            if prime_power_parts(q).is_none() {
                return Err(Error::NotPrimePower(q));
            }
            let m = dim / 2;
            let qq = q as u128;
            let mut factors = vec![qq.pow(m * m)];
            factors.extend((1..=m).map(|i| qq.pow(2 * i) - 1));
            to_u64(checked_product(factors)? / gcd(2, q - 1) as u128)
        }
        GroupFamily::Alt(n) => {
            if n < 2 {
                return Ok(1);
            }
            to_u64(checked_product((1..=n as u128).collect::<Vec<_>>())? / 2)
        }
        GroupFamily::Sym(n) => to_u64(checked_product((1..=n as u128).collect::<Vec<_>>())?),
        GroupFamily::M11 => Ok(11 * 10 * 9 * 8),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(
            classical_order(GroupFamily::Psl { n: 2, q: 11 }).unwrap(),
            660
        );
        assert_eq!(
            classical_order(GroupFamily::Psl { n: 2, q: 7 }).unwrap(),
            168
        );
        assert_eq!(classical_order(GroupFamily::Alt(6)).unwrap(), 360);
        assert_eq!(
            classical_order(GroupFamily::Psl { n: 2, q: 8 }).unwrap(),
            504
        );
        assert_eq!(
            classical_order(GroupFamily::Psl { n: 3, q: 3 }).unwrap(),
            5616
        );
        assert_eq!(
            classical_order(GroupFamily::Psl { n: 3, q: 4 }).unwrap(),
            20160
        );
        assert_eq!(
            classical_order(GroupFamily::Psu { n: 3, q: 3 }).unwrap(),
            6048
        );
        assert_eq!(
            classical_order(GroupFamily::Psu { n: 4, q: 2 }).unwrap(),
            25920
        );
        assert_eq!(classical_order(GroupFamily::M11).unwrap(), 7920);
        assert_eq!(classical_order(GroupFamily::Sym(4)).unwrap(), 24);
    }

    #[test]
    fn psl2_formula_matches_general_formula() {
        // l(l²−1)/gcd(2, l−1)
        for l in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 97] {
            let direct = l * (l * l - 1) / gcd(2, l - 1);
            assert_eq!(
                classical_order(GroupFamily::Psl { n: 2, q: l }).unwrap(),
                direct
            );
        }
    }

    #[test]
    fn u4_2_is_psp4_3() {
        assert_eq!(
            classical_order(GroupFamily::Psu { n: 4, q: 2 }).unwrap(),
            classical_order(GroupFamily::Psp { dim: 4, q: 3 }).unwrap()
        );
    }

    #[test]
    fn parsing_and_display() {
        let cases = [
            ("PSL(2,11)", "PSL(2,11)"),
            ("L2(11)", "PSL(2,11)"),
            ("L_3(2^2)", "PSL(3,4)"),
            ("psl( 2 , 9 )", "PSL(2,9)"),
            ("PSU(3,3)", "U3(3)"),
            ("U_4(2)", "U4(2)"),
            ("A5", "A5"),
            ("Alt(6)", "A6"),
            ("A_9", "A9"),
            ("Sym(4)", "S4"),
            ("M11", "M11"),
            ("M_11", "M11"),
        ];
        for (input, canonical) in cases {
            assert_eq!(
                GroupFamily::parse(input).unwrap().to_string(),
                canonical,
                "{input}"
            );
        }
        assert!(GroupFamily::parse("J2").is_err());
        assert!(GroupFamily::parse("PSL(2)").is_err());
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(
            classical_order(GroupFamily::Psl { n: 2, q: 6 }),
            Err(Error::NotPrimePower(6))
        ));
        assert!(classical_order(GroupFamily::Psl { n: 1, q: 5 }).is_err());
    }
}
