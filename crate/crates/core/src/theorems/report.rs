use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use serde_json::Value;

fn decimal<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_str_radix(10))
}

/// One checked instance of a congruence or identity.
///
/// `pass` holds iff `lhs = 0 mod modulus`. A modulus of zero means exact
/// equality with zero; identities `left = right` are recorded that way with
/// `lhs = left - right` and both sides kept in `params`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CongruenceReport {
    pub group: String,
    pub theorem: String,
    pub anchor: String,
    pub params: Value,
    #[serde(serialize_with = "decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "decimal")]
    pub modulus: BigInt,
    pub pass: bool,
}

fn holds(lhs: &BigInt, modulus: &BigInt) -> bool {
    if modulus.is_zero() {
        lhs.is_zero()
    } else {
        lhs.mod_floor(modulus).is_zero()
    }
}

impl CongruenceReport {
    pub fn congruence(
        group: &str,
        theorem: &str,
        anchor: &str,
        params: Value,
        lhs: impl Into<BigInt>,
        modulus: impl Into<BigInt>,
    ) -> Self {
        let (lhs, modulus) = (lhs.into(), modulus.into());
        CongruenceReport {
            group: group.to_string(),
            theorem: theorem.to_string(),
            anchor: anchor.to_string(),
            params,
            pass: holds(&lhs, &modulus),
            lhs,
            modulus,
        }
    }

    /// `left = right`, exactly.
    pub fn identity(
        group: &str,
        theorem: &str,
        anchor: &str,
        mut params: Value,
        left: impl Into<BigInt>,
        right: impl Into<BigInt>,
    ) -> Self {
        let (left, right) = (left.into(), right.into());
        if let Value::Object(m) = &mut params {
            m.insert("left".into(), Value::String(left.to_string()));
            m.insert("right".into(), Value::String(right.to_string()));
        }
        Self::congruence(group, theorem, anchor, params, left - right, 0)
    }

    /// A pointwise identity checked over many cases; `lhs` is the number of
    /// failing cases.
    pub fn mismatches(group: &str, theorem: &str, anchor: &str, params: Value, failures: usize) -> Self {
        Self::congruence(group, theorem, anchor, params, failures, 0)
    }

    /// Placeholder for work that could not be done within budget.
    pub fn skipped(group: &str, theorem: &str, reason: &str) -> Self {
        CongruenceReport {
            group: group.to_string(),
            theorem: theorem.to_string(),
            anchor: "skipped: budget exceeded".to_string(),
            params: serde_json::json!({ "skipped": true, "reason": reason }),
            lhs: BigInt::zero(),
            modulus: BigInt::zero(),
            pass: false,
        }
    }

    pub fn is_skipped(&self) -> bool {
        self.params.get("skipped") == Some(&Value::Bool(true))
    }

    /// One JSON object, no trailing newline.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for CongruenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.is_skipped() {
            "SKIP"
        } else if self.pass {
            "PASS"
        } else {
            "FAIL"
        };
        write!(f, "{status} {} {} {} lhs={}", self.group, self.theorem, self.params, self.lhs)?;
        if self.modulus.is_zero() {
            f.write_str(" (exact)")
        } else {
            write!(f, " mod {}", self.modulus)
        }
    }
}
