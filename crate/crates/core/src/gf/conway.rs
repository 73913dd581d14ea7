//! Tabulated Conway polynomials, coefficients low degree first (monic).

static TABLE: &[(u32, &[u32])] = &[
    (2, &[1, 1]),
    (2, &[1, 1, 1]),
    (2, &[1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 1]),
    (2, &[1, 0, 1, 0, 0, 1]),
    (2, &[1, 1, 0, 1, 1, 0, 1]),
    (2, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
    (2, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, &[1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1]),
    (2, &[1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, &[1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, &[1, 1]),
    (3, &[2, 2, 1]),
    (3, &[1, 2, 0, 1]),
    (3, &[2, 0, 0, 2, 1]),
    (3, &[1, 2, 0, 0, 0, 1]),
    (3, &[2, 2, 1, 0, 2, 0, 1]),
    (3, &[1, 0, 2, 0, 0, 0, 0, 1]),
    (3, &[2, 2, 2, 0, 1, 2, 0, 0, 1]),
    (3, &[1, 1, 2, 2, 0, 0, 0, 0, 0, 1]),
    (3, &[2, 1, 0, 0, 2, 2, 2, 0, 0, 0, 1]),
    (5, &[3, 1]),
    (5, &[2, 4, 1]),
    (5, &[3, 3, 0, 1]),
    (5, &[2, 4, 4, 0, 1]),
    (5, &[3, 4, 0, 0, 0, 1]),
    (5, &[2, 0, 1, 4, 1, 0, 1]),
    (5, &[3, 3, 0, 0, 0, 0, 0, 1]),
    (7, &[4, 1]),
    (7, &[3, 6, 1]),
    (7, &[4, 0, 6, 1]),
    (7, &[3, 4, 5, 0, 1]),
    (7, &[4, 1, 0, 0, 0, 1]),
    (7, &[3, 6, 4, 5, 1, 0, 1]),
    (11, &[9, 1]),
    (11, &[2, 7, 1]),
    (11, &[9, 2, 0, 1]),
    (11, &[2, 10, 8, 0, 1]),
    (11, &[9, 0, 10, 0, 0, 1]),
    (13, &[11, 1]),
    (13, &[2, 12, 1]),
    (13, &[11, 2, 0, 1]),
    (13, &[2, 12, 3, 0, 1]),
    (13, &[11, 4, 0, 0, 0, 1]),
    (17, &[14, 1]),
    (17, &[3, 16, 1]),
    (17, &[14, 1, 0, 1]),
    (17, &[3, 10, 7, 0, 1]),
    (19, &[17, 1]),
    (19, &[2, 18, 1]),
    (19, &[17, 4, 0, 1]),
    (19, &[2, 11, 2, 0, 1]),
    (23, &[18, 1]),
    (23, &[5, 21, 1]),
    (23, &[18, 2, 0, 1]),
    (29, &[27, 1]),
    (29, &[2, 24, 1]),
    (29, &[27, 2, 0, 1]),
    (31, &[28, 1]),
    (31, &[3, 29, 1]),
    (31, &[28, 1, 0, 1]),
];

/// The Conway polynomial `C_{p,m}` if it is in the shipped table.
pub fn conway_polynomial(p: u32, degree: u32) -> Option<&'static [u32]> {
    TABLE
        .iter()
        .find(|(q, c)| *q == p && c.len() == degree as usize + 1)
        .map(|(_, c)| *c)
}

#[cfg(test)]
fn table() -> impl Iterator<Item = (u32, &'static [u32])> {
    TABLE.iter().copied()
}
