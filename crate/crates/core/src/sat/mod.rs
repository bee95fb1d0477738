//! k-colorability as SAT.

mod chromatic;
mod cnf;
mod solver;

pub use chromatic::{chromatic_number_sat, decode_coloring, solve_coloring, ChromaticOptions, ChromaticResult};
pub use cnf::{
    color_var, encode_k_coloring, parse_dimacs, write_dimacs, write_dimacs_with_comments, CnfFormula,
};
pub use solver::{
    solve, solve_with, SatOutcome, SatStatus, SolverConfig, SolverStats, DEFAULT_CONFLICT_BUDGET,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FiniteGraph;

    #[test]
    fn dimacs_text() {
        let f = CnfFormula::new(1, vec![vec![1]]).unwrap();
        assert_eq!(write_dimacs(&f), "p cnf 1 1\n1 0\n");
        let f = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
        assert_eq!(write_dimacs(&f), "p cnf 1 2\n1 0\n-1 0\n");
        assert_eq!(parse_dimacs(&write_dimacs(&f)).unwrap(), f);
        assert_eq!(
            write_dimacs_with_comments(&f, &["hello"]),
            "c hello\np cnf 1 2\n1 0\n-1 0\n"
        );
    }

    #[test]
    fn single_edge_encoding() {
        let g = FiniteGraph::from_edges(2, [(0, 1)]).unwrap();
        let f = encode_k_coloring(&g, 2, false).unwrap();
        assert_eq!((f.var_count(), f.clause_count()), (4, 4));
        assert_eq!(
            write_dimacs(&f),
            "p cnf 4 4\n1 2 0\n3 4 0\n-1 -3 0\n-2 -4 0\n"
        );
        let f = encode_k_coloring(&g, 2, true).unwrap();
        // x_{1,1}, not x_{1,2}, and vertex 2 may use both colors
        assert_eq!(&f.clauses()[4..], &[vec![1], vec![-2]]);
    }

    #[test]
    fn rejects_malformed_formulas() {
        assert!(CnfFormula::new(1, vec![vec![]]).is_err());
        assert!(CnfFormula::new(1, vec![vec![2]]).is_err());
        assert!(CnfFormula::new(1, vec![vec![0]]).is_err());
        assert!(parse_dimacs("p cnf 1 2\n1 0\n").is_err());
        assert!(parse_dimacs("1 0\n").is_err());
    }
}
