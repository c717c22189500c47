use num_bigint::BigUint;
use serde::Serializer;

/// Writes a big integer as a JSON number when it fits in `u64`, otherwise as
/// a decimal string.
pub(crate) fn biguint<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(v) {
        Ok(x) => s.serialize_u64(x),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}
