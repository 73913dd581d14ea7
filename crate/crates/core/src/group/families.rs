use std::sync::Arc;

use super::{GroupError, Perm, PermGroup, DEFAULT_ORDER_GUARD};

/// Generators on a fixed number of points, not yet closed into a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl Presentation {
    pub fn new(degree: usize, generators: Vec<Perm>) -> Self {
        Presentation { degree, generators }
    }

    pub fn materialize(self, guard: usize) -> Result<Arc<PermGroup>, GroupError> {
        PermGroup::materialize(self.degree, self.generators, guard)
    }

    /// Disjoint union action: `self` on the first points, `other` on the rest.
    pub fn product(&self, other: &Presentation) -> Presentation {
        let degree = self.degree + other.degree;
        let mut generators: Vec<Perm> = self.generators.iter().map(|g| g.extend(degree)).collect();
        generators.extend(other.generators.iter().map(|g| g.shifted(self.degree, degree)));
        Presentation { degree, generators }
    }
}

fn cycle(degree: usize, points: Vec<usize>) -> Perm {
    Perm::from_cycles(degree, &[points]).expect("distinct points")
}

pub fn trivial_presentation() -> Presentation {
    Presentation::new(1, vec![])
}

pub fn cyclic_presentation(n: usize) -> Presentation {
    if n <= 1 {
        return trivial_presentation();
    }
    Presentation::new(n, vec![cycle(n, (0..n).collect())])
}

/// The dihedral group of order `order` (even), acting on `order / 2` points when that is at least 3.
pub fn dihedral_presentation(order: usize) -> Result<Presentation, GroupError> {
    if order == 0 || !order.is_multiple_of(2) {
        return Err(GroupError::Parse {
            line: 1,
            column: 1,
            message: format!("dihedral group order must be even, got {order}"),
        });
    }
    let k = order / 2;
    Ok(match k {
        1 => cyclic_presentation(2),
        2 => klein_four_presentation(),
        _ => {
            let reflection = (1..=(k - 1) / 2).map(|i| vec![i, k - i]).collect::<Vec<_>>();
            Presentation::new(
                k,
                vec![
                    cycle(k, (0..k).collect()),
                    Perm::from_cycles(k, &reflection).expect("disjoint transpositions"),
                ],
            )
        }
    })
}

pub fn symmetric_presentation(n: usize) -> Presentation {
    if n <= 1 {
        return trivial_presentation();
    }
    let mut gens = vec![cycle(n, vec![0, 1])];
    if n > 2 {
        gens.push(cycle(n, (0..n).collect()));
    }
    Presentation::new(n, gens)
}

pub fn alternating_presentation(n: usize) -> Presentation {
    if n <= 2 {
        return Presentation::new(n.max(1), vec![]);
    }
    Presentation::new(n, (2..n).map(|i| cycle(n, vec![0, 1, i])).collect())
}

pub fn klein_four_presentation() -> Presentation {
    Presentation::new(
        4,
        vec![
            Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap(),
            Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap(),
        ],
    )
}

/// The quaternion group in its regular action on `{±1, ±i, ±j, ±k}`.
pub fn quaternion8_presentation() -> Presentation {
    // Unit u in 0..4 = 1, i, j, k; element index = 4 * sign + u.
    fn unit_mul(a: usize, b: usize) -> (usize, usize) {
        const TABLE: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        TABLE[a][b]
    }
    let left = |u: usize| -> Perm {
        let images = (0..8)
            .map(|x| {
                let (s, v) = (x / 4, x % 4);
                let (t, w) = unit_mul(u, v);
                4 * ((s + t) % 2) + w
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    Presentation::new(8, vec![left(1), left(2)])
}

/// `SL(2,3)` acting on the 8 nonzero vectors of `F_3^2`.
pub fn sl2_3_presentation() -> Presentation {
    let vectors: Vec<(usize, usize)> = (0..9).map(|v| (v / 3, v % 3)).filter(|&v| v != (0, 0)).collect();
    let act = |m: [[usize; 2]; 2]| -> Perm {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let w = ((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3);
                vectors.iter().position(|&v| v == w).unwrap()
            })
            .collect();
        Perm::from_images(images).unwrap()
    };
    Presentation::new(8, vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])])
}

pub fn trivial_group() -> Arc<PermGroup> {
    trivial_presentation().materialize(1).unwrap()
}

pub fn cyclic(n: usize) -> Result<Arc<PermGroup>, GroupError> {
    cyclic_presentation(n).materialize(DEFAULT_ORDER_GUARD)
}

pub fn dihedral(order: usize) -> Result<Arc<PermGroup>, GroupError> {
    dihedral_presentation(order)?.materialize(DEFAULT_ORDER_GUARD)
}

pub fn symmetric(n: usize) -> Result<Arc<PermGroup>, GroupError> {
    symmetric_presentation(n).materialize(DEFAULT_ORDER_GUARD)
}

pub fn alternating(n: usize) -> Result<Arc<PermGroup>, GroupError> {
    alternating_presentation(n).materialize(DEFAULT_ORDER_GUARD)
}

pub fn klein_four() -> Arc<PermGroup> {
    klein_four_presentation().materialize(DEFAULT_ORDER_GUARD).unwrap()
}

pub fn quaternion8() -> Arc<PermGroup> {
    quaternion8_presentation().materialize(DEFAULT_ORDER_GUARD).unwrap()
}

pub fn sl2_3() -> Arc<PermGroup> {
    sl2_3_presentation().materialize(DEFAULT_ORDER_GUARD).unwrap()
}

pub fn direct_product(a: &Presentation, b: &Presentation) -> Result<Arc<PermGroup>, GroupError> {
    a.product(b).materialize(DEFAULT_ORDER_GUARD)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_statistics(g: &PermGroup) -> Vec<u32> {
        let mut v: Vec<u32> = (0..g.order()).map(|a| g.element_order(a)).collect();
        v.sort();
        v
    }

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(7).unwrap().order(), 7);
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(dihedral(8).unwrap().order(), 8);
        assert_eq!(dihedral(6).unwrap().order(), 6);
        assert_eq!(dihedral(4).unwrap().order(), 4);
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(klein_four().order(), 4);
        assert_eq!(quaternion8().order(), 8);
        assert_eq!(sl2_3().order(), 24);
        let c3s3 = direct_product(&cyclic_presentation(3), &symmetric_presentation(3)).unwrap();
        assert_eq!(c3s3.order(), 18);
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion8();
        assert_eq!(order_statistics(&q), vec![1, 2, 4, 4, 4, 4, 4, 4]);
        assert_eq!(q.class_count(), 5);
    }

    #[test]
    fn sl2_3_has_central_involution() {
        let g = sl2_3();
        assert_eq!(order_statistics(&g).iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(g.class_count(), 7);
    }

    #[test]
    fn dihedral_eight_is_not_quaternion() {
        let d = dihedral(8).unwrap();
        assert_eq!(order_statistics(&d).iter().filter(|&&o| o == 2).count(), 5);
    }

    #[test]
    fn odd_dihedral_order_rejected() {
        assert!(dihedral(7).is_err());
    }
}
