//! The named types of normalized fundamental triplets and the matcher that
//! assigns a validated triplet to its type.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::geometry::{CurveRole, Location, SubschemePoint};
use crate::picard::{DivisorClass, Surface};
use crate::triplet::TripletConfig;

/// Kind of a component, without its identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Line,
    Sigma,
    SigmaInf,
    Fiber,
}

impl Kind {
    fn of(role: &CurveRole) -> Option<Kind> {
        match role {
            CurveRole::Line(_) => Some(Kind::Line),
            CurveRole::MinimalSection => Some(Kind::Sigma),
            CurveRole::SectionAtInfinity => Some(Kind::SigmaInf),
            CurveRole::Fiber(_) => Some(Kind::Fiber),
            CurveRole::IrreducibleMember(_) => None,
        }
    }
}

/// A component selected by kind and coefficient.
type Sel = (Kind, i64);

/// A requirement on the points of `Delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Req {
    /// Every selected component carries points lying on it alone, each with
    /// `mult = contact`, of total contact `d`.
    Free(Sel, u32),
    /// Every selected component carries exactly these `(mult, contact)`
    /// points lying on it alone.
    Exact(Sel, Vec<(u32, u32)>),
    /// The unique component `first` meets every component selected by
    /// `each` at a point of `Delta` with the given degree and contacts
    /// `(degree, contact with first, contact with each)`.
    At(Sel, Sel, (u32, u32, u32)),
}

/// Data of a type at a fixed parameter value.
#[derive(Debug, Clone)]
struct Shape {
    a: u32,
    b: u32,
    surface: Surface,
    components: Vec<Sel>,
    delta: Vec<Req>,
}

/// How the family parameter is read from the surface.
#[derive(Debug, Clone, Copy)]
enum Param {
    None,
    /// `n` is the Hirzebruch degree, subject to `n >= 3` and the predicate.
    N(fn(i64) -> bool),
    /// `n = step * m + 2` with `m >= 1`.
    M(i64),
}

/// One named type.
#[derive(Debug, Clone, Copy)]
pub struct TypeSpec {
    /// Symbolic name, e.g. `[(2n-1,n+1),n;2(n-2),n-2]_1`.
    pub label: &'static str,
    /// Subscript part of the name, used for instance labels.
    pub subscript: &'static str,
    /// Name of the dual-graph table row the type belongs to.
    pub table_row: &'static str,
    param: Param,
    shape: fn(i64) -> Shape,
}

impl TypeSpec {
    /// True for the types with `b/a = 1/2`.
    pub fn is_half(&self) -> bool {
        let sh = (self.shape)(3);
        2 * sh.b == sh.a
    }

    /// `Some("n")` or `Some("m")` for families.
    pub fn parameter_name(&self) -> Option<&'static str> {
        match self.param {
            Param::None => None,
            Param::N(_) => Some("n"),
            Param::M(_) => Some("m"),
        }
    }

    /// The index, Hirzebruch degree and parameters of every instance with
    /// `a <= a_max` and `n <= n_max`.
    pub fn instances(&self, a_max: u32, n_max: u32) -> Vec<Instance> {
        let candidates: Vec<i64> = match self.param {
            Param::None => vec![0],
            Param::N(cond) => (3..=i64::from(n_max)).filter(|&n| cond(n)).collect(),
            Param::M(step) => (1..)
                .take_while(|m| step * m + 2 <= i64::from(n_max))
                .collect(),
        };
        candidates
            .into_iter()
            .map(|p| self.instance_at(p))
            .filter(|i| i.a <= a_max && i.surface.hirzebruch_degree().unwrap_or(0) <= n_max)
            .collect()
    }

    fn instance_at(&self, p: i64) -> Instance {
        let sh = (self.shape)(p);
        let mut params = BTreeMap::new();
        match self.param {
            Param::None => {}
            Param::N(_) => {
                params.insert("n".to_string(), p);
            }
            Param::M(step) => {
                params.insert("m".to_string(), p);
                params.insert("n".to_string(), step * p + 2);
            }
        }
        Instance {
            a: sh.a,
            b: sh.b,
            surface: sh.surface,
            params,
        }
    }

    fn parameter_for(&self, surface: Surface) -> Option<i64> {
        let n = surface.hirzebruch_degree().map(i64::from);
        match self.param {
            Param::None => Some(0),
            Param::N(cond) => n.filter(|&n| n >= 3 && cond(n)),
            Param::M(step) => n
                .filter(|&n| n >= 2 && (n - 2) % step == 0 && n - 2 >= step)
                .map(|n| (n - 2) / step),
        }
    }
}

/// A concrete instance of a type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Instance {
    pub a: u32,
    pub b: u32,
    pub surface: Surface,
    pub params: BTreeMap<String, i64>,
}

fn to_u32(v: i64) -> u32 {
    u32::try_from(v).expect("positive catalog value")
}

fn plane(a: i64, b: i64, components: Vec<Sel>, delta: Vec<Req>) -> Shape {
    Shape {
        a: to_u32(a),
        b: to_u32(b),
        surface: Surface::ProjectivePlane,
        components,
        delta,
    }
}

fn hirz(a: i64, b: i64, n: i64, components: Vec<Sel>, delta: Vec<Req>) -> Shape {
    Shape {
        a: to_u32(a),
        b: to_u32(b),
        surface: Surface::Hirzebruch(to_u32(n)),
        components,
        delta,
    }
}

use Kind::{Fiber as F, Line as Ln, Sigma as S, SigmaInf as Si};

fn always(_: i64) -> bool {
    true
}

fn n_family_2n_1(n: i64) -> bool {
    (n - 2) % 3 != 0
}

fn n_family_4n_3(n: i64) -> bool {
    (n - 2) % 5 != 0
}

fn odd(n: i64) -> bool {
    n % 2 == 1
}

fn n_family_4n_5(n: i64) -> bool {
    (n - 2) % 3 != 0
}

/// Every type of both classification theorems.
pub static CATALOG: &[TypeSpec] = &[
    TypeSpec {
        label: "[(3,2),1]_0",
        subscript: "0",
        table_row: "[(3,2),1]_0",
        param: Param::None,
        shape: |_| plane(3, 2, vec![(Ln, 1)], vec![Req::Free((Ln, 1), 4)]),
    },
    TypeSpec {
        label: "[(11,7),5]_0",
        subscript: "0",
        table_row: "[(11,7),5]_0",
        param: Param::None,
        shape: |_| {
            plane(
                11,
                7,
                vec![(Ln, 5)],
                vec![Req::Exact((Ln, 5), vec![(5, 4)])],
            )
        },
    },
    TypeSpec {
        label: "[(5,3),3]_0(1)",
        subscript: "0(1)",
        table_row: "[(5,3),3]_0(1)",
        param: Param::None,
        shape: |_| plane(5, 3, vec![(Ln, 3)], vec![Req::Exact((Ln, 3), vec![(6, 4)])]),
    },
    TypeSpec {
        label: "[(5,3),3]_0(2)",
        subscript: "0(2)",
        table_row: "[(5,3),3]_0(2)",
        param: Param::None,
        shape: |_| {
            plane(
                5,
                3,
                vec![(Ln, 3)],
                vec![Req::Exact((Ln, 3), vec![(3, 2), (3, 2)])],
            )
        },
    },
    TypeSpec {
        label: "[(9,5),7]_×43",
        subscript: "×43",
        table_row: "[(9,5),7]_×43",
        param: Param::None,
        shape: |_| {
            plane(
                9,
                5,
                vec![(Ln, 4), (Ln, 3)],
                vec![Req::At((Ln, 4), (Ln, 3), (4, 1, 4)), Req::Free((Ln, 4), 3)],
            )
        },
    },
    TypeSpec {
        label: "[(5,3),2;1,2]_1",
        subscript: "1",
        table_row: "[(5,3),2;1,2]_1",
        param: Param::None,
        shape: |_| hirz(5, 3, 2, vec![(S, 1), (F, 2)], vec![Req::Free((F, 2), 3)]),
    },
    TypeSpec {
        label: "[(7,4),2;2,4]_1",
        subscript: "1",
        table_row: "[(7,4),2;2,4]_1",
        param: Param::None,
        shape: |_| {
            hirz(
                7,
                4,
                2,
                vec![(S, 2), (F, 4)],
                vec![Req::Exact((F, 4), vec![(4, 3)])],
            )
        },
    },
    TypeSpec {
        label: "[(13,7),2;5,10]_1",
        subscript: "1",
        table_row: "[(13,7),2;5,10]_1",
        param: Param::None,
        shape: |_| {
            hirz(
                13,
                7,
                2,
                vec![(S, 5), (F, 10)],
                vec![Req::Exact((F, 10), vec![(5, 3)])],
            )
        },
    },
    TypeSpec {
        label: "[(21,11),2;9,7]_1",
        subscript: "1",
        table_row: "[(21,11),2;9,7]_1",
        param: Param::None,
        shape: |_| {
            hirz(
                21,
                11,
                2,
                vec![(S, 9), (F, 7)],
                vec![Req::At((S, 9), (F, 7), (3, 1, 3))],
            )
        },
    },
    TypeSpec {
        label: "[(2n-1,n+1),n;2(n-2),n-2]_1",
        subscript: "1",
        table_row: "[(2n-1,n+1),n;2(n-2),n-2]_1",
        param: Param::N(n_family_2n_1),
        shape: |n| {
            let c = n - 2;
            hirz(
                2 * n - 1,
                n + 1,
                n,
                vec![(S, 2 * c), (F, c)],
                vec![Req::Free((F, c), 2)],
            )
        },
    },
    TypeSpec {
        label: "[(2m+1,m+1),3m+2;2m,m]_1",
        subscript: "1",
        table_row: "[(2n-1,n+1),n;2(n-2),n-2]_1",
        param: Param::M(3),
        shape: |m| {
            hirz(
                2 * m + 1,
                m + 1,
                3 * m + 2,
                vec![(S, 2 * m), (F, m)],
                vec![Req::Free((F, m), 2)],
            )
        },
    },
    TypeSpec {
        label: "[(4n-3,2n+1),n;4(n-2),3(n-2)]_1",
        subscript: "1",
        table_row: "[(4n-3,2n+1),n;4(n-2),3(n-2)]_1",
        param: Param::N(n_family_4n_3),
        shape: |n| {
            let c = n - 2;
            hirz(
                4 * n - 3,
                2 * n + 1,
                n,
                vec![(S, 4 * c), (F, 3 * c)],
                vec![Req::Exact((F, 3 * c), vec![(3, 2)])],
            )
        },
    },
    TypeSpec {
        label: "[(4m+1,2m+1),5m+2;4m,3m]_1",
        subscript: "1",
        table_row: "[(4n-3,2n+1),n;4(n-2),3(n-2)]_1",
        param: Param::M(5),
        shape: |m| {
            hirz(
                4 * m + 1,
                2 * m + 1,
                5 * m + 2,
                vec![(S, 4 * m), (F, 3 * m)],
                vec![Req::Exact((F, 3 * m), vec![(3, 2)])],
            )
        },
    },
    TypeSpec {
        label: "[(2n-2,n),n;2(n-2),2(n-2)]_11",
        subscript: "11",
        table_row: "[(2n-2,n),n;2(n-2),2(n-2)]_11",
        param: Param::N(odd),
        shape: |n| {
            let c = n - 2;
            hirz(
                2 * n - 2,
                n,
                n,
                vec![(S, 2 * c), (F, c), (F, c)],
                vec![Req::Free((F, c), 2)],
            )
        },
    },
    TypeSpec {
        label: "[(2m+1,m+1),2m+2;2m,2m]_11",
        subscript: "11",
        table_row: "[(2n-2,n),n;2(n-2),2(n-2)]_11",
        param: Param::M(2),
        shape: |m| {
            hirz(
                2 * m + 1,
                m + 1,
                2 * m + 2,
                vec![(S, 2 * m), (F, m), (F, m)],
                vec![Req::Free((F, m), 2)],
            )
        },
    },
    TypeSpec {
        label: "[(2n-2,n),n;2(n-2),2(n-2)]_1(1)",
        subscript: "1(1)",
        table_row: "[(2n-2,n),n;2(n-2),2(n-2)]_1(1)",
        param: Param::N(odd),
        shape: |n| {
            let c = n - 2;
            hirz(
                2 * n - 2,
                n,
                n,
                vec![(S, 2 * c), (F, 2 * c)],
                vec![Req::Exact((F, 2 * c), vec![(4, 2)])],
            )
        },
    },
    TypeSpec {
        label: "[(2m+1,m+1),2m+2;2m,2m]_1(1)",
        subscript: "1(1)",
        table_row: "[(2n-2,n),n;2(n-2),2(n-2)]_1(1)",
        param: Param::M(2),
        shape: |m| {
            hirz(
                2 * m + 1,
                m + 1,
                2 * m + 2,
                vec![(S, 2 * m), (F, 2 * m)],
                vec![Req::Exact((F, 2 * m), vec![(4, 2)])],
            )
        },
    },
    TypeSpec {
        label: "[(2n-2,n),n;2(n-2),2(n-2)]_1(2)",
        subscript: "1(2)",
        table_row: "[(2n-2,n),n;2(n-2),2(n-2)]_1(2)",
        param: Param::N(odd),
        shape: |n| {
            let c = n - 2;
            hirz(
                2 * n - 2,
                n,
                n,
                vec![(S, 2 * c), (F, 2 * c)],
                vec![Req::Exact((F, 2 * c), vec![(2, 1), (2, 1)])],
            )
        },
    },
    TypeSpec {
        label: "[(2m+1,m+1),2m+2;2m,2m]_1(2)",
        subscript: "1(2)",
        table_row: "[(2n-2,n),n;2(n-2),2(n-2)]_1(2)",
        param: Param::M(2),
        shape: |m| {
            hirz(
                2 * m + 1,
                m + 1,
                2 * m + 2,
                vec![(S, 2 * m), (F, 2 * m)],
                vec![Req::Exact((F, 2 * m), vec![(2, 1), (2, 1)])],
            )
        },
    },
    TypeSpec {
        label: "[(4n-5,2n-1),n;4(n-2),5(n-2)]_32",
        subscript: "32",
        table_row: "[(4n-5,2n-1),n;4(n-2),5(n-2)]_32",
        param: Param::N(n_family_4n_5),
        shape: |n| {
            let c = n - 2;
            hirz(
                4 * n - 5,
                2 * n - 1,
                n,
                vec![(S, 4 * c), (F, 3 * c), (F, 2 * c)],
                vec![
                    Req::Exact((F, 3 * c), vec![(3, 2)]),
                    Req::Free((F, 2 * c), 2),
                ],
            )
        },
    },
    TypeSpec {
        label: "[(4m+1,2m+1),3m+2;4m,5m]_32",
        subscript: "32",
        table_row: "[(4n-5,2n-1),n;4(n-2),5(n-2)]_32",
        param: Param::M(3),
        shape: |m| {
            hirz(
                4 * m + 1,
                2 * m + 1,
                3 * m + 2,
                vec![(S, 4 * m), (F, 3 * m), (F, 2 * m)],
                vec![
                    Req::Exact((F, 3 * m), vec![(3, 2)]),
                    Req::Free((F, 2 * m), 2),
                ],
            )
        },
    },
    TypeSpec {
        label: "[(7,5),3;4,5]_1",
        subscript: "1",
        table_row: "[(7,5),3;4,5]_1",
        param: Param::None,
        shape: |_| {
            hirz(
                7,
                5,
                3,
                vec![(S, 4), (F, 5)],
                vec![Req::Exact((F, 5), vec![(5, 2)])],
            )
        },
    },
    TypeSpec {
        label: "[(2n-3,n-1),n;2(n-2),3(n-2)]_111",
        subscript: "111",
        table_row: "[(2n-3,n-1),n;2(n-2),3(n-2)]_111",
        param: Param::N(always),
        shape: |n| {
            let c = n - 2;
            hirz(
                2 * n - 3,
                n - 1,
                n,
                vec![(S, 2 * c), (F, c), (F, c), (F, c)],
                vec![Req::Free((F, c), 2)],
            )
        },
    },
    TypeSpec {
        label: "[(2n-3,n-1),n;2(n-2),3(n-2)]_21(1)",
        subscript: "21(1)",
        table_row: "[(2n-3,n-1),n;2(n-2),3(n-2)]_21(1)",
        param: Param::N(always),
        shape: |n| {
            let c = n - 2;
            hirz(
                2 * n - 3,
                n - 1,
                n,
                vec![(S, 2 * c), (F, 2 * c), (F, c)],
                vec![Req::Exact((F, 2 * c), vec![(4, 2)]), Req::Free((F, c), 2)],
            )
        },
    },
    TypeSpec {
        label: "[(2n-3,n-1),n;2(n-2),3(n-2)]_21(2)",
        subscript: "21(2)",
        table_row: "[(2n-3,n-1),n;2(n-2),3(n-2)]_21(2)",
        param: Param::N(always),
        shape: |n| {
            let c = n - 2;
            hirz(
                2 * n - 3,
                n - 1,
                n,
                vec![(S, 2 * c), (F, 2 * c), (F, c)],
                vec![
                    Req::Exact((F, 2 * c), vec![(2, 1), (2, 1)]),
                    Req::Free((F, c), 2),
                ],
            )
        },
    },
    TypeSpec {
        label: "[(4n-6,2n-2),n;4(n-2),6(n-2)]_11",
        subscript: "11",
        table_row: "[(4n-6,2n-2),n;4(n-2),6(n-2)]_11",
        param: Param::N(odd),
        shape: |n| {
            let c = n - 2;
            hirz(
                4 * n - 6,
                2 * n - 2,
                n,
                vec![(S, 4 * c), (F, 3 * c), (F, 3 * c)],
                vec![Req::Exact((F, 3 * c), vec![(3, 2)])],
            )
        },
    },
    TypeSpec {
        label: "[(4m+1,2m+1),2m+2;4m,6m]_11",
        subscript: "11",
        table_row: "[(4n-6,2n-2),n;4(n-2),6(n-2)]_11",
        param: Param::M(2),
        shape: |m| {
            hirz(
                4 * m + 1,
                2 * m + 1,
                2 * m + 2,
                vec![(S, 4 * m), (F, 3 * m), (F, 3 * m)],
                vec![Req::Exact((F, 3 * m), vec![(3, 2)])],
            )
        },
    },
    TypeSpec {
        label: "[(3,2),3;2,3]_1∞",
        subscript: "1∞",
        table_row: "[(3,2),3;2,3]_1∞",
        param: Param::None,
        shape: |_| hirz(3, 2, 3, vec![(S, 1), (Si, 1)], vec![Req::Free((Si, 1), 6)]),
    },
    TypeSpec {
        label: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_322",
        subscript: "322",
        table_row: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_322",
        param: Param::N(always),
        shape: |n| {
            let c = n - 2;
            hirz(
                4 * n - 7,
                2 * n - 3,
                n,
                vec![(S, 4 * c), (F, 3 * c), (F, 2 * c), (F, 2 * c)],
                vec![
                    Req::Exact((F, 3 * c), vec![(3, 2)]),
                    Req::Free((F, 2 * c), 2),
                ],
            )
        },
    },
    TypeSpec {
        label: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_43(1)",
        subscript: "43(1)",
        table_row: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_43(1)",
        param: Param::N(always),
        shape: |n| {
            let c = n - 2;
            hirz(
                4 * n - 7,
                2 * n - 3,
                n,
                vec![(S, 4 * c), (F, 4 * c), (F, 3 * c)],
                vec![
                    Req::Exact((F, 4 * c), vec![(4, 2)]),
                    Req::Exact((F, 3 * c), vec![(3, 2)]),
                ],
            )
        },
    },
    TypeSpec {
        label: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_43(2)",
        subscript: "43(2)",
        table_row: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_43(2)",
        param: Param::N(always),
        shape: |n| {
            let c = n - 2;
            hirz(
                4 * n - 7,
                2 * n - 3,
                n,
                vec![(S, 4 * c), (F, 4 * c), (F, 3 * c)],
                vec![
                    Req::Exact((F, 4 * c), vec![(2, 1), (2, 1)]),
                    Req::Exact((F, 3 * c), vec![(3, 2)]),
                ],
            )
        },
    },
    TypeSpec {
        label: "[(15,9),3;12,21]_5∞1",
        subscript: "5∞1",
        table_row: "[(15,9),3;12,21]_5∞1",
        param: Param::None,
        shape: |_| {
            hirz(
                15,
                9,
                3,
                vec![(S, 7), (Si, 5), (F, 6)],
                vec![Req::At((Si, 5), (F, 6), (6, 6, 1)), Req::Free((F, 6), 1)],
            )
        },
    },
    TypeSpec {
        label: "[(5,3),3;4,7]_2∞1",
        subscript: "2∞1",
        table_row: "[(5,3),3;4,7]_2∞1",
        param: Param::None,
        shape: |_| {
            hirz(
                5,
                3,
                3,
                vec![(S, 2), (Si, 2), (F, 1)],
                vec![Req::At((Si, 2), (F, 1), (2, 1, 2)), Req::Free((Si, 2), 5)],
            )
        },
    },
    TypeSpec {
        label: "[(6,3),6]_×21",
        subscript: "×21",
        table_row: "[(6,3),6]_×21",
        param: Param::None,
        shape: |_| {
            plane(
                6,
                3,
                vec![(Ln, 4), (Ln, 2)],
                vec![
                    Req::At((Ln, 4), (Ln, 2), (4, 1, 4)),
                    Req::Exact((Ln, 4), vec![(4, 3)]),
                ],
            )
        },
    },
    TypeSpec {
        label: "[(6,3),3;6,12]_2∞11",
        subscript: "2∞11",
        table_row: "[(6,3),3;6,12]_2∞11",
        param: Param::None,
        shape: |_| {
            hirz(
                6,
                3,
                3,
                vec![(S, 4), (Si, 2), (F, 3), (F, 3)],
                vec![Req::At((Si, 2), (F, 3), (3, 3, 1)), Req::Free((F, 3), 1)],
            )
        },
    },
    TypeSpec {
        label: "[(10,5),3;10,20]_4∞53",
        subscript: "4∞53",
        table_row: "[(10,5),3;10,20]_4∞53",
        param: Param::None,
        shape: |_| {
            hirz(
                10,
                5,
                3,
                vec![(S, 6), (Si, 4), (F, 5), (F, 3)],
                vec![
                    Req::At((Si, 4), (F, 5), (5, 5, 1)),
                    Req::At((Si, 4), (F, 3), (2, 1, 2)),
                    Req::Free((F, 5), 1),
                ],
            )
        },
    },
    TypeSpec {
        label: "[(4,2),3;4,8]_2∞11",
        subscript: "2∞11",
        table_row: "[(4,2),3;4,8]_2∞11",
        param: Param::None,
        shape: |_| {
            hirz(
                4,
                2,
                3,
                vec![(S, 2), (Si, 2), (F, 1), (F, 1)],
                vec![Req::At((Si, 2), (F, 1), (2, 1, 2)), Req::Free((Si, 2), 4)],
            )
        },
    },
];

/// The distinct table rows, in catalog order.
pub fn table_rows() -> Vec<&'static str> {
    let mut rows: Vec<&'static str> = Vec::new();
    for spec in CATALOG {
        if !rows.contains(&spec.table_row) {
            rows.push(spec.table_row);
        }
    }
    rows
}

/// Result of a successful match.
#[derive(Debug, Clone)]
pub struct Labelled {
    pub spec: &'static TypeSpec,
    pub label: String,
    pub instance: String,
    pub params: BTreeMap<String, i64>,
}

fn selected(t: &TripletConfig, sel: Sel) -> Vec<CurveRole> {
    t.config()
        .components()
        .iter()
        .filter(|c| Kind::of(&c.role) == Some(sel.0) && c.coeff == sel.1.into())
        .map(|c| c.role)
        .collect()
}

fn on_curve_points<'a>(t: &'a TripletConfig, role: &CurveRole) -> Vec<&'a SubschemePoint> {
    t.points()
        .iter()
        .filter(|p| p.location() == Location::OnCurve(*role))
        .collect()
}

fn matches(t: &TripletConfig, shape: &Shape) -> bool {
    if t.index().a() != shape.a || t.index().b() != shape.b || t.surface() != shape.surface {
        return false;
    }
    let mut have: Vec<Sel> = Vec::new();
    for c in t.config().components() {
        let (Some(kind), true) = (Kind::of(&c.role), c.coeff.is_integer()) else {
            return false;
        };
        have.push((kind, c.coeff.to_integer()));
    }
    let mut want = shape.components.clone();
    have.sort();
    want.sort();
    if have != want {
        return false;
    }

    let mut covered = vec![false; t.points().len()];
    let mark = |p: &SubschemePoint, covered: &mut Vec<bool>| {
        let i = t.points().iter().position(|q| q == p).expect("own point");
        if covered[i] {
            return false;
        }
        covered[i] = true;
        true
    };
    for req in &shape.delta {
        match req {
            Req::Free(sel, d) => {
                let roles = selected(t, *sel);
                if roles.is_empty() {
                    return false;
                }
                for role in roles {
                    let pts = on_curve_points(t, &role);
                    let total: u32 = pts.iter().map(|p| p.contact(&role)).sum();
                    if total != *d || pts.iter().any(|p| p.degree() != p.contact(&role)) {
                        return false;
                    }
                    for p in pts {
                        if !mark(p, &mut covered) {
                            return false;
                        }
                    }
                }
            }
            Req::Exact(sel, data) => {
                let roles = selected(t, *sel);
                if roles.is_empty() {
                    return false;
                }
                let mut want = data.clone();
                want.sort();
                for role in roles {
                    let pts = on_curve_points(t, &role);
                    let mut got: Vec<(u32, u32)> =
                        pts.iter().map(|p| (p.degree(), p.contact(&role))).collect();
                    got.sort();
                    if got != want {
                        return false;
                    }
                    for p in pts {
                        if !mark(p, &mut covered) {
                            return false;
                        }
                    }
                }
            }
            Req::At(first, each, (k, c_first, c_each)) => {
                let firsts = selected(t, *first);
                let eaches = selected(t, *each);
                if firsts.len() != 1 || eaches.is_empty() {
                    return false;
                }
                let f = firsts[0];
                for e in eaches {
                    let loc = Location::crossing(f, e);
                    let pts: Vec<&SubschemePoint> =
                        t.points().iter().filter(|p| p.location() == loc).collect();
                    if pts.len() != 1 {
                        return false;
                    }
                    let p = pts[0];
                    if p.degree() != *k || p.contact(&f) != *c_first || p.contact(&e) != *c_each {
                        return false;
                    }
                    if !mark(p, &mut covered) {
                        return false;
                    }
                }
            }
        }
    }
    covered.iter().all(|&c| c)
}

fn instance_label(t: &TripletConfig, subscript: &str) -> String {
    let class = t.config().class();
    let int = |r: crate::picard::Rational| r.to_integer().to_i64().unwrap_or_default();
    match t.surface() {
        Surface::ProjectivePlane => format!(
            "[({},{}),{}]_{}",
            t.index().a(),
            t.index().b(),
            int(class.first()),
            subscript
        ),
        Surface::Hirzebruch(n) => format!(
            "[({},{}),{};{},{}]_{}",
            t.index().a(),
            t.index().b(),
            n,
            int(class.first()),
            int(class.second()),
            subscript
        ),
    }
}

/// Finds the type of a validated normalized triplet.
pub fn match_type(t: &TripletConfig) -> Option<Labelled> {
    for spec in CATALOG {
        let Some(p) = spec.parameter_for(t.surface()) else {
            continue;
        };
        let shape = (spec.shape)(p);
        if matches(t, &shape) {
            let params = spec.instance_at(p).params;
            return Some(Labelled {
                spec,
                label: spec.label.to_string(),
                instance: instance_label(t, spec.subscript),
                params,
            });
        }
    }
    None
}

/// `E` class of a catalog type at a parameter value, for tests and tools.
pub fn catalog_class(spec: &TypeSpec, p: i64) -> DivisorClass {
    let sh = (spec.shape)(p);
    let mut class = DivisorClass::zero(sh.surface);
    let n = sh.surface.hirzebruch_degree().unwrap_or(0);
    for (kind, c) in sh.components {
        let unit = match kind {
            Kind::Line => DivisorClass::line(),
            Kind::Sigma => DivisorClass::sigma(n),
            Kind::SigmaInf => DivisorClass::sigma_infinity(n),
            Kind::Fiber => DivisorClass::fiber(n),
        };
        class = class + unit.scale(c.into());
    }
    class
}
