//! Size-guard defaults taken from the environment.
//!
//! Each field of [`Limits`] can be raised or lowered with an
//! `IMPARTIAL_MAX_*` variable, e.g. `IMPARTIAL_MAX_PERMUTATION_N=10`.

use impartial_core::Limits;

use crate::error::{Result, ToolError};

pub const ENV_VARS: [&str; 8] = [
    "IMPARTIAL_MAX_PARTITION_ASSIGNMENTS",
    "IMPARTIAL_MAX_PERMUTATION_N",
    "IMPARTIAL_MAX_IMPARTIALITY_N",
    "IMPARTIAL_MAX_SYMMETRIZE_N",
    "IMPARTIAL_MAX_ENUMERATE_ALL_N",
    "IMPARTIAL_MAX_ENUMERATE_NO_ABSTENTION_N",
    "IMPARTIAL_MAX_ENUMERATE_OUTDEGREE_ONE_N",
    "IMPARTIAL_MAX_COMPOSITIONS",
];

/// Applies the overrides found by `lookup` to the default limits and returns
/// them with the list of `NAME=value` pairs that were used.
pub fn limits_from(lookup: impl Fn(&str) -> Option<String>) -> Result<(Limits, Vec<String>)> {
    let mut limits = Limits::DEFAULT;
    let mut used = Vec::new();
    for name in ENV_VARS {
        let Some(raw) = lookup(name) else { continue };
        let value: u64 = raw
            .trim()
            .parse()
            .map_err(|_| ToolError::Usage(format!("{name} must be a nonnegative integer, got `{raw}`")))?;
        let small = || usize::try_from(value).unwrap_or(usize::MAX);
        match name {
            "IMPARTIAL_MAX_PARTITION_ASSIGNMENTS" => limits.partition_assignments = value,
            "IMPARTIAL_MAX_PERMUTATION_N" => limits.permutation_n = small(),
            "IMPARTIAL_MAX_IMPARTIALITY_N" => limits.impartiality_n = small(),
            "IMPARTIAL_MAX_SYMMETRIZE_N" => limits.symmetrize_n = small(),
            "IMPARTIAL_MAX_ENUMERATE_ALL_N" => limits.enumerate_all_n = small(),
            "IMPARTIAL_MAX_ENUMERATE_NO_ABSTENTION_N" => limits.enumerate_no_abstention_n = small(),
            "IMPARTIAL_MAX_ENUMERATE_OUTDEGREE_ONE_N" => limits.enumerate_outdegree_one_n = small(),
            "IMPARTIAL_MAX_COMPOSITIONS" => limits.compositions = value,
            _ => unreachable!(),
        }
        used.push(format!("{name}={value}"));
    }
    Ok((limits, used))
}

pub fn limits_from_env() -> Result<(Limits, Vec<String>)> {
    limits_from(|name| std::env::var(name).ok())
}

/// A seed in decimal or `0x`-prefixed hexadecimal.
pub fn parse_seed(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(&hex.replace('_', ""), 16),
        None => s.replace('_', "").parse(),
    };
    parsed.map_err(|_| format!("`{s}` is not a 64-bit seed"))
}

/// `a..b` (inclusive) or a single value.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("`{s}` is not a range like 1..4");
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => {
            (a.trim().parse().map_err(|_| bad())?, b.trim_start_matches('=').trim().parse().map_err(|_| bad())?)
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("range `{s}` is empty"));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_are_applied_and_reported() {
        let (limits, used) = limits_from(|name| match name {
            "IMPARTIAL_MAX_PERMUTATION_N" => Some("10".into()),
            "IMPARTIAL_MAX_COMPOSITIONS" => Some(" 5 ".into()),
            _ => None,
        })
        .unwrap();
        assert_eq!(limits.permutation_n, 10);
        assert_eq!(limits.compositions, 5);
        assert_eq!(limits.partition_assignments, Limits::DEFAULT.partition_assignments);
        assert_eq!(used, ["IMPARTIAL_MAX_PERMUTATION_N=10", "IMPARTIAL_MAX_COMPOSITIONS=5"]);
        assert!(limits_from(|_| Some("lots".into())).is_err());
        assert_eq!(limits_from(|_| None).unwrap(), (Limits::DEFAULT, vec![]));
    }

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("42"), Ok(42));
        assert_eq!(parse_seed("0xff"), Ok(255));
        assert_eq!(parse_seed("0XDEAD_BEEF"), Ok(0xDEAD_BEEF));
        assert!(parse_seed("-1").is_err());
        assert!(parse_seed("0x").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..4"), Ok((1, 4)));
        assert_eq!(parse_range("1..=4"), Ok((1, 4)));
        assert_eq!(parse_range("5"), Ok((5, 5)));
        assert!(parse_range("4..1").is_err());
        assert!(parse_range("a..b").is_err());
    }
}
