//! Serde adapters writing `BigInt` vectors as plain JSON integers.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

fn narrow<E: serde::ser::Error>(xs: &[BigInt]) -> Result<Vec<i64>, E> {
    xs.iter().map(|x| x.to_i64().ok_or_else(|| E::custom("integer exceeds 64-bit range"))).collect()
}

pub mod vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        narrow(xs)?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Ok(Vec::<i64>::deserialize(d)?.into_iter().map(BigInt::from).collect())
    }
}

pub mod vec_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xss: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
        xss.iter().map(|xs| narrow(xs)).collect::<Result<Vec<_>, _>>()?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
        Ok(Vec::<Vec<i64>>::deserialize(d)?.into_iter().map(|xs| xs.into_iter().map(BigInt::from).collect()).collect())
    }
}

pub mod option_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &Option<Vec<BigInt>>, s: S) -> Result<S::Ok, S::Error> {
        match xs {
            Some(xs) => Some(narrow(xs)?).serialize(s),
            None => None::<Vec<i64>>.serialize(s),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Vec<BigInt>>, D::Error> {
        Ok(Option::<Vec<i64>>::deserialize(d)?.map(|xs| xs.into_iter().map(BigInt::from).collect()))
    }
}

pub mod scalar {
    use super::*;

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        x.to_i64().ok_or_else(|| serde::ser::Error::custom("integer exceeds 64-bit range"))?.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        Ok(BigInt::from(i64::deserialize(d)?))
    }
}
