//! Projective parameters `[u : v]` on the line, with the value convention
//! `t = v/u`, so `[1:0]` is `t = 0` and `[0:1]` is `t = infinity`. Pencil
//! dynamics (Hesse pencil, syzygetic series, J-invariants) all run through
//! this type, which makes the infinite parameter a first-class citizen.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::Rat;

#[derive(Clone, Debug)]
pub struct ProjParam {
    u: Rat,
    v: Rat,
}

impl ProjParam {
    pub fn new(u: Rat, v: Rat) -> Result<Self> {
        if u.is_zero() && v.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(ProjParam { u, v })
    }

    pub fn from_i64(u: i64, v: i64) -> Self {
        Self::new(crate::field::rat_i(u), crate::field::rat_i(v)).expect("not both zero")
    }

    /// The finite value `t`, as `[1 : t]`.
    pub fn from_value(t: Rat) -> Self {
        ProjParam { u: crate::field::rat_i(1), v: t }
    }

    pub fn infinity() -> Self {
        Self::from_i64(0, 1)
    }

    pub fn u(&self) -> &Rat {
        &self.u
    }

    pub fn v(&self) -> &Rat {
        &self.v
    }

    pub fn is_infinity(&self) -> bool {
        self.u.is_zero()
    }

    /// The value `v/u`; `None` at infinity.
    pub fn value(&self) -> Option<Rat> {
        if self.u.is_zero() {
            None
        } else {
            Some(&self.v / &self.u)
        }
    }

    /// Scales so the first nonzero coordinate is 1.
    pub fn normalize(&self) -> Self {
        if !self.u.is_zero() {
            ProjParam { u: crate::field::rat_i(1), v: &self.v / &self.u }
        } else {
            ProjParam { u: Rat::zero(), v: crate::field::rat_i(1) }
        }
    }

    pub fn to_string_pair(&self) -> String {
        let n = self.normalize();
        format!("{},{}", n.u, n.v)
    }

    /// Parses `"u,v"` with rational entries.
    pub fn parse_pair(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::InvalidInput(format!("expected \"u,v\", got {s:?}")));
        }
        let u = parse_rat(parts[0].trim())?;
        let v = parse_rat(parts[1].trim())?;
        Self::new(u, v)
    }
}

pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidInput(format!("bad rational {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let num: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
        let den: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rat::new(num, den))
    } else {
        let num: num_bigint::BigInt = s.trim().parse().map_err(|_| bad())?;
        Ok(Rat::from_integer(num))
    }
}

impl PartialEq for ProjParam {
    fn eq(&self, other: &Self) -> bool {
        &self.u * &other.v == &self.v * &other.u
    }
}

impl std::fmt::Display for ProjParam {
    fn fmt(&self, w: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(w, "[{}:{}]", self.u, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_equality_and_infinity() {
        assert_eq!(ProjParam::from_i64(1, 2), ProjParam::from_i64(3, 6));
        assert_ne!(ProjParam::from_i64(1, 0), ProjParam::from_i64(0, 1));
        assert!(ProjParam::infinity().is_infinity());
        assert!(ProjParam::new(Rat::zero(), Rat::zero()).is_err());
        assert_eq!(ProjParam::from_i64(2, 6).value().unwrap(), crate::field::rat_i(3));
    }

    #[test]
    fn pair_parsing() {
        let p = ProjParam::parse_pair("2, -4").unwrap();
        assert_eq!(p, ProjParam::from_i64(1, -2));
        assert_eq!(ProjParam::parse_pair("1/2,3").unwrap(), ProjParam::from_i64(1, 6));
        assert!(ProjParam::parse_pair("1").is_err());
        assert!(ProjParam::parse_pair("1,0/0").is_err());
    }
}
