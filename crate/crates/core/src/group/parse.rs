use super::families::Presentation;
use super::{GroupError, Perm};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> GroupError {
    GroupError::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Reads a group file: the first nonempty line is the degree, every further nonempty line
/// is one generator written as disjoint cycles on 1-based points, e.g. `(1 2 3)(4 5)`.
/// Points inside a cycle may be separated by spaces or commas; `()` is the identity.
pub fn parse_group_file(text: &str) -> Result<Presentation, GroupError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let (first, degree_line) = lines.next().ok_or_else(|| parse_error(1, 1, "missing degree line"))?;
    let col = degree_line.len() - degree_line.trim_start().len() + 1;
    let degree: usize = degree_line
        .trim()
        .parse()
        .map_err(|_| parse_error(first, col, format!("expected a degree, found {:?}", degree_line.trim())))?;
    if degree == 0 {
        return Err(parse_error(first, col, "degree must be positive"));
    }
    let generators = lines
        .map(|(n, l)| parse_generator(l, n, degree))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Presentation::new(degree, generators))
}

fn parse_generator(line: &str, line_no: usize, degree: usize) -> Result<Perm, GroupError> {
    let chars: Vec<char> = line.chars().collect();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            '(' => {
                if current.is_some() {
                    return Err(parse_error(line_no, col, "nested '('"));
                }
                current = Some(Vec::new());
            }
            ')' => {
                let cyc = current
                    .take()
                    .ok_or_else(|| parse_error(line_no, col, "unmatched ')'"))?;
                if cyc.len() > 1 {
                    cycles.push(cyc);
                }
            }
            c if c.is_whitespace() || c == ',' => {}
            c if c.is_ascii_digit() => {
                let start = i;
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..=i].iter().collect();
                let point: usize = text
                    .parse()
                    .map_err(|_| parse_error(line_no, start + 1, "point out of range"))?;
                if point == 0 || point > degree {
                    return Err(parse_error(
                        line_no,
                        start + 1,
                        format!("point {point} outside 1..={degree}"),
                    ));
                }
                let cyc = current
                    .as_mut()
                    .ok_or_else(|| parse_error(line_no, start + 1, "point outside a cycle"))?;
                if cyc.contains(&(point - 1)) {
                    return Err(parse_error(line_no, start + 1, format!("point {point} repeated")));
                }
                cyc.push(point - 1);
            }
            other => return Err(parse_error(line_no, col, format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    if current.is_some() {
        return Err(parse_error(line_no, chars.len() + 1, "unclosed '('"));
    }
    Perm::from_cycles(degree, &cycles).map_err(|_| parse_error(line_no, 1, "cycles are not disjoint"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_s3() {
        let p = parse_group_file("3\n(1 2 3)\n(1 2)\n").unwrap();
        assert_eq!(p.materialize(360).unwrap().order(), 6);
    }

    #[test]
    fn tolerates_whitespace_and_identity() {
        let p = parse_group_file("\n  4 \n ( 1 , 2 )( 3 4 )\n\n()\n").unwrap();
        assert_eq!(p.generators.len(), 2);
        assert!(p.generators[1].is_identity());
        assert_eq!(p.materialize(360).unwrap().order(), 2);
    }

    #[test]
    fn reports_positions() {
        match parse_group_file("3\n(1 2)(2 3)") {
            Err(GroupError::Parse { line: 2, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_group_file("3\n(1 4)") {
            Err(GroupError::Parse { line: 2, column: 4, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse_group_file("x") {
            Err(GroupError::Parse { line: 1, column: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_group_file("3\n(1 2"),
            Err(GroupError::Parse { line: 2, column: 5, .. })
        ));
    }
}
