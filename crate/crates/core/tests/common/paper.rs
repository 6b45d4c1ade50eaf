//! Reference data transcribed from the statements of the classification
//! theorems and from the dual-graph tables. Nothing here is computed by the
//! library.

use std::collections::BTreeSet;

use delpezzo_core::{DualGraph, Surface};

/// How the instances of a type are parametrized.
#[derive(Debug, Clone, Copy)]
pub enum Family {
    Sporadic,
    /// Parameter `n >= 3` subject to a predicate.
    InN(fn(i64) -> bool),
    /// Parameter `m >= 1`.
    InM,
}

/// `(a, b, n, d, e)` of an instance.
pub type TypeData = (i64, i64, Option<i64>, i64, i64);

/// One type as printed in the theorems: the symbolic name and the formula
/// `p -> (a, b, n, d, e)`. For types on the plane `n` is `None` and `d` is
/// unused.
#[derive(Debug, Clone, Copy)]
pub struct PaperType {
    pub label: &'static str,
    pub family: Family,
    pub data: fn(i64) -> TypeData,
    pub subscript: &'static str,
    /// Name of the dual-graph row.
    pub row: &'static str,
}

/// A concrete instance of a [`PaperType`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExpectedInstance {
    pub label: String,
    pub instance: String,
    pub a: u32,
    pub b: u32,
    pub surface: Surface,
    pub row: &'static str,
    /// The Hirzebruch degree, used to read `-n` vertices of the row.
    pub n: i64,
}

fn coprime3(n: i64) -> bool {
    (n - 2) % 3 != 0
}

fn coprime5(n: i64) -> bool {
    (n - 2) % 5 != 0
}

fn odd(n: i64) -> bool {
    n % 2 == 1
}

fn any(_: i64) -> bool {
    true
}

const R_2N1: &str = "[(2n-1,n+1),n;2(n-2),n-2]_1";
const R_4N3: &str = "[(4n-3,2n+1),n;4(n-2),3(n-2)]_1";
const R_2N2_11: &str = "[(2n-2,n),n;2(n-2),2(n-2)]_11";
const R_2N2_1A: &str = "[(2n-2,n),n;2(n-2),2(n-2)]_1(1)";
const R_2N2_1B: &str = "[(2n-2,n),n;2(n-2),2(n-2)]_1(2)";
const R_4N5: &str = "[(4n-5,2n-1),n;4(n-2),5(n-2)]_32";
const R_4N6: &str = "[(4n-6,2n-2),n;4(n-2),6(n-2)]_11";

/// Every type of both theorems.
pub fn paper_types() -> Vec<PaperType> {
    use Family::*;
    macro_rules! sporadic_plane {
        ($label:expr, $sub:expr, $a:expr, $b:expr, $e:expr) => {
            PaperType {
                label: $label,
                family: Sporadic,
                data: |_| ($a, $b, None, 0, $e),
                subscript: $sub,
                row: $label,
            }
        };
    }
    macro_rules! sporadic {
        ($label:expr, $sub:expr, $a:expr, $b:expr, $n:expr, $d:expr, $e:expr) => {
            PaperType {
                label: $label,
                family: Sporadic,
                data: |_| ($a, $b, Some($n), $d, $e),
                subscript: $sub,
                row: $label,
            }
        };
    }
    vec![
        sporadic_plane!("[(3,2),1]_0", "0", 3, 2, 1),
        sporadic_plane!("[(11,7),5]_0", "0", 11, 7, 5),
        sporadic_plane!("[(5,3),3]_0(1)", "0(1)", 5, 3, 3),
        sporadic_plane!("[(5,3),3]_0(2)", "0(2)", 5, 3, 3),
        sporadic_plane!("[(9,5),7]_×43", "×43", 9, 5, 7),
        sporadic_plane!("[(6,3),6]_×21", "×21", 6, 3, 6),
        sporadic!("[(5,3),2;1,2]_1", "1", 5, 3, 2, 1, 2),
        sporadic!("[(7,4),2;2,4]_1", "1", 7, 4, 2, 2, 4),
        sporadic!("[(13,7),2;5,10]_1", "1", 13, 7, 2, 5, 10),
        sporadic!("[(21,11),2;9,7]_1", "1", 21, 11, 2, 9, 7),
        sporadic!("[(7,5),3;4,5]_1", "1", 7, 5, 3, 4, 5),
        sporadic!("[(3,2),3;2,3]_1∞", "1∞", 3, 2, 3, 2, 3),
        sporadic!("[(15,9),3;12,21]_5∞1", "5∞1", 15, 9, 3, 12, 21),
        sporadic!("[(5,3),3;4,7]_2∞1", "2∞1", 5, 3, 3, 4, 7),
        sporadic!("[(6,3),3;6,12]_2∞11", "2∞11", 6, 3, 3, 6, 12),
        sporadic!("[(10,5),3;10,20]_4∞53", "4∞53", 10, 5, 3, 10, 20),
        sporadic!("[(4,2),3;4,8]_2∞11", "2∞11", 4, 2, 3, 4, 8),
        PaperType {
            label: R_2N1,
            family: InN(coprime3),
            data: |n| (2 * n - 1, n + 1, Some(n), 2 * (n - 2), n - 2),
            subscript: "1",
            row: R_2N1,
        },
        PaperType {
            label: "[(2m+1,m+1),3m+2;2m,m]_1",
            family: InM,
            data: |m| (2 * m + 1, m + 1, Some(3 * m + 2), 2 * m, m),
            subscript: "1",
            row: R_2N1,
        },
        PaperType {
            label: R_4N3,
            family: InN(coprime5),
            data: |n| (4 * n - 3, 2 * n + 1, Some(n), 4 * (n - 2), 3 * (n - 2)),
            subscript: "1",
            row: R_4N3,
        },
        PaperType {
            label: "[(4m+1,2m+1),5m+2;4m,3m]_1",
            family: InM,
            data: |m| (4 * m + 1, 2 * m + 1, Some(5 * m + 2), 4 * m, 3 * m),
            subscript: "1",
            row: R_4N3,
        },
        PaperType {
            label: R_2N2_11,
            family: InN(odd),
            data: |n| (2 * n - 2, n, Some(n), 2 * (n - 2), 2 * (n - 2)),
            subscript: "11",
            row: R_2N2_11,
        },
        PaperType {
            label: "[(2m+1,m+1),2m+2;2m,2m]_11",
            family: InM,
            data: |m| (2 * m + 1, m + 1, Some(2 * m + 2), 2 * m, 2 * m),
            subscript: "11",
            row: R_2N2_11,
        },
        PaperType {
            label: R_2N2_1A,
            family: InN(odd),
            data: |n| (2 * n - 2, n, Some(n), 2 * (n - 2), 2 * (n - 2)),
            subscript: "1(1)",
            row: R_2N2_1A,
        },
        PaperType {
            label: "[(2m+1,m+1),2m+2;2m,2m]_1(1)",
            family: InM,
            data: |m| (2 * m + 1, m + 1, Some(2 * m + 2), 2 * m, 2 * m),
            subscript: "1(1)",
            row: R_2N2_1A,
        },
        PaperType {
            label: R_2N2_1B,
            family: InN(odd),
            data: |n| (2 * n - 2, n, Some(n), 2 * (n - 2), 2 * (n - 2)),
            subscript: "1(2)",
            row: R_2N2_1B,
        },
        PaperType {
            label: "[(2m+1,m+1),2m+2;2m,2m]_1(2)",
            family: InM,
            data: |m| (2 * m + 1, m + 1, Some(2 * m + 2), 2 * m, 2 * m),
            subscript: "1(2)",
            row: R_2N2_1B,
        },
        PaperType {
            label: R_4N5,
            family: InN(coprime3),
            data: |n| (4 * n - 5, 2 * n - 1, Some(n), 4 * (n - 2), 5 * (n - 2)),
            subscript: "32",
            row: R_4N5,
        },
        PaperType {
            label: "[(4m+1,2m+1),3m+2;4m,5m]_32",
            family: InM,
            data: |m| (4 * m + 1, 2 * m + 1, Some(3 * m + 2), 4 * m, 5 * m),
            subscript: "32",
            row: R_4N5,
        },
        PaperType {
            label: "[(2n-3,n-1),n;2(n-2),3(n-2)]_111",
            family: InN(any),
            data: |n| (2 * n - 3, n - 1, Some(n), 2 * (n - 2), 3 * (n - 2)),
            subscript: "111",
            row: "[(2n-3,n-1),n;2(n-2),3(n-2)]_111",
        },
        PaperType {
            label: "[(2n-3,n-1),n;2(n-2),3(n-2)]_21(1)",
            family: InN(any),
            data: |n| (2 * n - 3, n - 1, Some(n), 2 * (n - 2), 3 * (n - 2)),
            subscript: "21(1)",
            row: "[(2n-3,n-1),n;2(n-2),3(n-2)]_21(1)",
        },
        PaperType {
            label: "[(2n-3,n-1),n;2(n-2),3(n-2)]_21(2)",
            family: InN(any),
            data: |n| (2 * n - 3, n - 1, Some(n), 2 * (n - 2), 3 * (n - 2)),
            subscript: "21(2)",
            row: "[(2n-3,n-1),n;2(n-2),3(n-2)]_21(2)",
        },
        PaperType {
            label: R_4N6,
            family: InN(odd),
            data: |n| (4 * n - 6, 2 * n - 2, Some(n), 4 * (n - 2), 6 * (n - 2)),
            subscript: "11",
            row: R_4N6,
        },
        PaperType {
            label: "[(4m+1,2m+1),2m+2;4m,6m]_11",
            family: InM,
            data: |m| (4 * m + 1, 2 * m + 1, Some(2 * m + 2), 4 * m, 6 * m),
            subscript: "11",
            row: R_4N6,
        },
        PaperType {
            label: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_322",
            family: InN(any),
            data: |n| (4 * n - 7, 2 * n - 3, Some(n), 4 * (n - 2), 7 * (n - 2)),
            subscript: "322",
            row: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_322",
        },
        PaperType {
            label: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_43(1)",
            family: InN(any),
            data: |n| (4 * n - 7, 2 * n - 3, Some(n), 4 * (n - 2), 7 * (n - 2)),
            subscript: "43(1)",
            row: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_43(1)",
        },
        PaperType {
            label: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_43(2)",
            family: InN(any),
            data: |n| (4 * n - 7, 2 * n - 3, Some(n), 4 * (n - 2), 7 * (n - 2)),
            subscript: "43(2)",
            row: "[(4n-7,2n-3),n;4(n-2),7(n-2)]_43(2)",
        },
    ]
}

/// All instances with `a <= a_max` and Hirzebruch degree at most `n_max`.
pub fn expected_instances(a_max: u32, n_max: u32) -> BTreeSet<ExpectedInstance> {
    let mut out = BTreeSet::new();
    for t in paper_types() {
        let params: Vec<i64> = match t.family {
            Family::Sporadic => vec![0],
            Family::InN(cond) => (3..=i64::from(n_max)).filter(|&n| cond(n)).collect(),
            Family::InM => (1..=i64::from(n_max)).collect(),
        };
        for p in params {
            let (a, b, n, d, e) = (t.data)(p);
            if a > i64::from(a_max) || n.is_some_and(|n| n > i64::from(n_max)) {
                continue;
            }
            let (surface, instance) = match n {
                None => (
                    Surface::ProjectivePlane,
                    format!("[({a},{b}),{e}]_{}", t.subscript),
                ),
                Some(n) => (
                    Surface::Hirzebruch(n as u32),
                    format!("[({a},{b}),{n};{d},{e}]_{}", t.subscript),
                ),
            };
            out.insert(ExpectedInstance {
                label: t.label.to_string(),
                instance,
                a: a as u32,
                b: b as u32,
                surface,
                row: t.row,
                n: n.unwrap_or(0),
            });
        }
    }
    out
}

/// Placeholder weight for the `(-n)`-vertex of a family row.
pub const MINUS_N: i64 = 0;

/// Row name, self-intersections and edges.
pub type TableRow = (&'static str, Vec<i64>, Vec<(usize, usize)>);

/// The dual graphs of `E` row by row: self-intersections (with
/// [`MINUS_N`] for the `(-n)`-curve) and edges.
pub fn table_rows() -> Vec<TableRow> {
    let n = MINUS_N;
    let path = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
    vec![
        ("[(3,2),1]_0", vec![-3], vec![]),
        ("[(11,7),5]_0", vec![-3, -2, -2, -2, -2], path(5)),
        (
            "[(5,3),3]_0(1)",
            vec![-3, -2, -2, -2, -2, -2],
            vec![(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)],
        ),
        ("[(5,3),3]_0(2)", vec![-2, -2, -3, -2, -2], path(5)),
        (
            "[(9,5),7]_×43",
            vec![-3, -2, -2, -2, -3],
            vec![(0, 1), (1, 2), (2, 3)],
        ),
        ("[(5,3),2;1,2]_1", vec![-3, -2], vec![(0, 1)]),
        ("[(7,4),2;2,4]_1", vec![-2, -3, -2, -2, -2], path(5)),
        (
            "[(13,7),2;5,10]_1",
            vec![-2, -3, -2, -2, -2, -2],
            vec![(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)],
        ),
        (
            "[(21,11),2;9,7]_1",
            vec![-3, -2, -2, -3],
            vec![(0, 1), (1, 2)],
        ),
        (R_2N1, vec![n, -2], vec![(0, 1)]),
        (R_4N3, vec![n, -2, -2, -2], path(4)),
        (R_2N2_11, vec![-2, n, -2], path(3)),
        (
            R_2N2_1A,
            vec![n, -2, -2, -2, -2],
            vec![(0, 1), (1, 2), (2, 3), (2, 4)],
        ),
        (R_2N2_1B, vec![n, -2, -2, -2], vec![(0, 1), (1, 2), (1, 3)]),
        (R_4N5, vec![-2, n, -2, -2, -2], path(5)),
        (
            "[(7,5),3;4,5]_1",
            vec![-3, -2, -2, -2, -2, -2],
            vec![(0, 1), (1, 2), (2, 3), (2, 4), (4, 5)],
        ),
        (
            "[(2n-3,n-1),n;2(n-2),3(n-2)]_111",
            vec![-2, n, -2, -2],
            vec![(0, 1), (1, 2), (1, 3)],
        ),
        (
            "[(2n-3,n-1),n;2(n-2),3(n-2)]_21(1)",
            vec![-2, n, -2, -2, -2, -2],
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (3, 5)],
        ),
        (
            "[(2n-3,n-1),n;2(n-2),3(n-2)]_21(2)",
            vec![-2, n, -2, -2, -2],
            vec![(0, 1), (1, 2), (2, 3), (2, 4)],
        ),
        (R_4N6, vec![-2, -2, -2, n, -2, -2, -2], path(7)),
        ("[(3,2),3;2,3]_1∞", vec![-3, -3], vec![]),
        (
            "[(4n-7,2n-3),n;4(n-2),7(n-2)]_322",
            vec![-2, n, -2, -2, -2, -2],
            vec![(0, 1), (1, 2), (1, 3), (3, 4), (4, 5)],
        ),
        (
            "[(4n-7,2n-3),n;4(n-2),7(n-2)]_43(1)",
            vec![-2, -2, -2, -2, n, -2, -2, -2],
            vec![(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7)],
        ),
        (
            "[(4n-7,2n-3),n;4(n-2),7(n-2)]_43(2)",
            vec![-2, -2, -2, n, -2, -2, -2],
            vec![(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (5, 6)],
        ),
        (
            "[(15,9),3;12,21]_5∞1",
            vec![-3, -2, -2, -2, -2, -2, -2, -3],
            path(7),
        ),
        (
            "[(5,3),3;4,7]_2∞1",
            vec![-3, -2, -3, -2],
            vec![(0, 1), (2, 3)],
        ),
        (
            "[(6,3),6]_×21",
            vec![-2, -2, -2, -3, -2, -2, -2, -3],
            path(7),
        ),
        (
            "[(6,3),3;6,12]_2∞11",
            vec![-2, -2, -2, -3, -2, -2, -2, -3],
            path(7),
        ),
        (
            "[(10,5),3;10,20]_4∞53",
            vec![-2, -3, -2, -2, -2, -2, -2, -3, -2],
            {
                let mut e = path(7);
                e.push((7, 8));
                e
            },
        ),
        (
            "[(4,2),3;4,8]_2∞11",
            vec![-2, -3, -2, -2, -3, -2],
            vec![(0, 1), (1, 2), (3, 4), (4, 5)],
        ),
    ]
}

/// The graph of a row with the `(-n)`-vertex instantiated.
pub fn row_graph(row: &str, n: i64) -> Option<DualGraph> {
    table_rows()
        .into_iter()
        .find(|(name, _, _)| *name == row)
        .map(|(_, weights, edges)| {
            let w: Vec<i64> = weights
                .iter()
                .map(|&x| if x == MINUS_N { -n } else { x })
                .collect();
            DualGraph::from_parts(&w, &edges)
        })
}

/// A case excluded by the case analysis with `b/a = 1/2`.
#[derive(Debug, Clone, Copy)]
pub struct ExcludedCase {
    pub name: &'static str,
    /// `None` for the plane.
    pub n: Option<u32>,
    /// Coefficient of the fiber (or the degree on the plane) in `L`.
    pub h: i64,
    /// `deg Delta`, when the case fixes it.
    pub k: Option<u32>,
    /// Whether `K + L` is big.
    pub big: bool,
}

/// The excluded cases with `b/a = 1/2`.
pub fn excluded_cases() -> Vec<ExcludedCase> {
    let big = |name, n, h, k| ExcludedCase {
        name,
        n: Some(n),
        h,
        k: Some(k),
        big: true,
    };
    vec![
        big("(0,3,1/2,6)", 0, 3, 6),
        big("(0,4,1/2,4)", 0, 4, 4),
        big("(1,5,1/2,5)", 1, 5, 5),
        big("(1,6,1/2,3)", 1, 6, 3),
        big("(2,6,1/2,6)", 2, 6, 6),
        big("(2,7,1/2,4)", 2, 7, 4),
        big("(2,8,1/2,2)", 2, 8, 2),
        big("(3,9,1/2,3)", 3, 9, 3),
        big("(3,10,1/2,1)", 3, 10, 1),
        ExcludedCase {
            name: "(1,4,1/2)",
            n: Some(1),
            h: 4,
            k: None,
            big: false,
        },
        ExcludedCase {
            name: "(5,5,1/2)",
            n: None,
            h: 5,
            k: Some(5),
            big: false,
        },
    ]
}
