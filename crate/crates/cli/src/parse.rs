//! Parsing of command-line partition syntax and rank ranges.

use ctp_core::Partition;

/// Parses the command-line partition syntax: comma-separated positive
/// integers in weakly decreasing order (`"3,1"`), the empty string or
/// `"0"` for the empty partition, or a JSON-style array (`"[3,1]"`,
/// `"[]"`).
///
/// Non-descending input is an error, never silently sorted.
pub fn parse_partition(input: &str) -> Result<Partition, String> {
    let trimmed = input.trim();
    let body = if let Some(stripped) = trimmed.strip_prefix('[') {
        stripped
            .strip_suffix(']')
            .ok_or_else(|| format!("unterminated partition array {trimmed:?}"))?
    } else {
        trimmed
    };
    body.parse::<Partition>().map_err(|e| e.to_string())
}

/// Parses an inclusive rank range of the form `A..B` (also accepting a
/// single number `A` as `A..A`).
pub fn parse_rank_range(input: &str) -> Result<(u32, u32), String> {
    let trimmed = input.trim();
    let (lo, hi) = match trimmed.split_once("..") {
        Some((a, b)) => (a, b),
        None => (trimmed, trimmed),
    };
    let lo: u32 = lo.trim().parse().map_err(|_| format!("invalid rank range {input:?}"))?;
    let hi: u32 = hi.trim().parse().map_err(|_| format!("invalid rank range {input:?}"))?;
    if lo == 0 || hi < lo {
        return Err(format!("invalid rank range {input:?}: need 1 <= A <= B"));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_parse() {
        assert_eq!(parse_partition("3,1").unwrap().parts(), &[3, 1]);
        assert_eq!(parse_partition("").unwrap().parts(), &[] as &[u32]);
        assert_eq!(parse_partition("0").unwrap().parts(), &[] as &[u32]);
        assert_eq!(parse_partition("[3,1]").unwrap().parts(), &[3, 1]);
        assert_eq!(parse_partition("[]").unwrap().parts(), &[] as &[u32]);
        assert!(parse_partition("1,2").is_err());
        assert!(parse_partition("[3,1").is_err());
        assert!(parse_partition("x").is_err());
    }

    #[test]
    fn ranges_parse() {
        assert_eq!(parse_rank_range("1..3").unwrap(), (1, 3));
        assert_eq!(parse_rank_range("4").unwrap(), (4, 4));
        assert!(parse_rank_range("0..2").is_err());
        assert!(parse_rank_range("3..2").is_err());
        assert!(parse_rank_range("a..b").is_err());
    }
}
