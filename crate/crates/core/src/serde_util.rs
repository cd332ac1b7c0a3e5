//! Serde adapters: rationals as `"a/b"` strings, fields as text components.

use num_rational::BigRational;
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

use crate::polyvec::{parse_poly, render_poly, VectorField};

pub fn rat_to_string(q: &BigRational) -> String {
    q.to_string()
}

pub fn rat_from_str(s: &str) -> Result<BigRational, String> {
    let bad = || format!("bad rational {s:?}");
    match s.split_once('/') {
        Some((a, b)) => {
            let (a, b) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if b == 0.into() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

pub mod rat_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(rat_to_string).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigRational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| rat_from_str(s).map_err(D::Error::custom))
            .collect()
    }
}

pub mod rat_mat {
    use super::*;

    pub fn serialize<S: Serializer>(m: &[Vec<BigRational>], s: S) -> Result<S::Ok, S::Error> {
        m.iter()
            .map(|r| r.iter().map(rat_to_string).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigRational>>, D::Error> {
        Vec::<Vec<String>>::deserialize(d)?
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| rat_from_str(s).map_err(D::Error::custom))
                    .collect()
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct FieldRepr {
    n: usize,
    components: Vec<String>,
}

pub mod field {
    use super::*;

    pub fn serialize<S: Serializer>(x: &VectorField, s: S) -> Result<S::Ok, S::Error> {
        FieldRepr {
            n: x.n(),
            components: x.components().iter().map(render_poly).collect(),
        }
        .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<VectorField, D::Error> {
        let r = FieldRepr::deserialize(d)?;
        if r.components.len() != r.n {
            return Err(D::Error::custom("component count differs from n"));
        }
        let comps = r
            .components
            .iter()
            .map(|c| parse_poly(c, r.n).map_err(D::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        VectorField::new(comps).map_err(D::Error::custom)
    }
}
