use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A real value that may carry the `+∞` flag (λe for ν = ½, μc in the
/// couple-stress limit). Encoded in JSON as a number or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Extended {
    Finite(f64),
    Infinite,
}

impl Extended {
    /// Maps `f64::INFINITY` to the flag; other values are kept as they are.
    pub fn from_f64(x: f64) -> Self {
        if x == f64::INFINITY {
            Extended::Infinite
        } else {
            Extended::Finite(x)
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            Extended::Finite(x) => Some(x),
            Extended::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Extended::Infinite)
    }

    /// `f64::INFINITY` for the flag.
    pub fn value(self) -> f64 {
        match self {
            Extended::Finite(x) => x,
            Extended::Infinite => f64::INFINITY,
        }
    }

    pub fn map(self, f: impl Fn(f64) -> f64) -> Self {
        match self {
            Extended::Finite(x) => Extended::Finite(f(x)),
            Extended::Infinite => Extended::Infinite,
        }
    }
}

impl From<f64> for Extended {
    fn from(x: f64) -> Self {
        Extended::from_f64(x)
    }
}

impl std::fmt::Display for Extended {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Extended::Finite(x) => write!(f, "{x}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Extended::Finite(x) => s.serialize_f64(*x),
            Extended::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Raw {
    Num(f64),
    Str(String),
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match Raw::deserialize(d)? {
            Raw::Num(x) => Ok(Extended::Finite(x)),
            Raw::Str(s) if s == "inf" => Ok(Extended::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("expected a number or \"inf\", got {s:?}"))),
        }
    }
}

/// Serializer for plain f64 values that may be ±∞ or NaN (margins, velocities):
/// non-finite values become the strings "inf", "-inf" and "nan".
pub mod serde_signed_f64 {
    use serde::Serializer;

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        if x.is_finite() {
            s.serialize_f64(*x)
        } else if x.is_nan() {
            s.serialize_str("nan")
        } else if *x > 0.0 {
            s.serialize_str("inf")
        } else {
            s.serialize_str("-inf")
        }
    }
}
