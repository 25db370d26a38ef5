use teq_core::AltSet;

/// Parses `1,3,5-8` (1-based) into a 0-based set for a tournament of `order`.
pub fn parse_list(text: &str, order: usize) -> Result<AltSet, String> {
    let mut set = AltSet::EMPTY;
    for part in text.split(',').map(str::trim) {
        if part.is_empty() {
            return Err(format!("empty entry in index list {text:?}"));
        }
        let (lo, hi) = match part.split_once('-') {
            Some((a, b)) => (parse_index(a, order)?, parse_index(b, order)?),
            None => {
                let i = parse_index(part, order)?;
                (i, i)
            }
        };
        if lo > hi {
            return Err(format!("descending range {part:?}"));
        }
        set = set | AltSet::range(lo, hi + 1);
    }
    Ok(set)
}

/// One 1-based index, returned 0-based.
pub fn parse_index(text: &str, order: usize) -> Result<usize, String> {
    let i: usize = text.trim().parse().map_err(|_| format!("invalid index {text:?}"))?;
    check_index(i, order)
}

pub fn check_index(i: usize, order: usize) -> Result<usize, String> {
    if i == 0 || i > order {
        Err(format!("index {i} out of range 1..={order}"))
    } else {
        Ok(i - 1)
    }
}

pub fn one_based(set: AltSet) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_and_ranges() {
        assert_eq!(parse_list("1,2,3", 3).unwrap(), AltSet::universe(3));
        assert_eq!(parse_list("13-24", 24).unwrap(), AltSet::range(12, 24));
        assert_eq!(parse_list(" 2 , 4-5", 5).unwrap().iter().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert!(parse_list("0", 3).is_err());
        assert!(parse_list("4", 3).is_err());
        assert!(parse_list("1,,2", 3).is_err());
        assert!(parse_list("3-1", 3).is_err());
        assert!(parse_list("a", 3).is_err());
    }

    #[test]
    fn output_is_one_based() {
        assert_eq!(one_based(AltSet::from_bits(0b101)), vec![1, 3]);
    }
}
