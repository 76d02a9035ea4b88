//! Line accounting: physical lines, non-blank source lines, logical
//! statements, and declared parameter totals.

use crate::ast::*;
use crate::error::ParseError;
use crate::parser::parse;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LineCounts {
    /// Logical statements after parsing (blocks and empty statements are
    /// structure, not statements).
    pub logical: u64,
    /// Non-blank source lines.
    pub sloc: u64,
    /// Raw line count.
    pub physical: u64,
    /// Total declared parameters across all functions.
    pub params: u64,
}

pub fn count_lines(source: &str) -> Result<LineCounts, ParseError> {
    let program = parse(source)?;
    let mut counts = LineCounts {
        physical: if source.is_empty() {
            0
        } else {
            source.lines().count() as u64
        },
        sloc: source
            .lines()
            .filter(|l| !l.trim().is_empty())
            .count() as u64,
        ..Default::default()
    };
    for stmt in &program.body {
        walk_stmt(stmt, &mut counts);
    }
    Ok(counts)
}

fn walk_function(f: &Function, c: &mut LineCounts) {
    c.params += f.params.len() as u64;
    match &f.body {
        FunctionBody::Block(body) => {
            for s in body {
                walk_stmt(s, c);
            }
        }
        // a bare arrow body is an implicit return statement
        FunctionBody::Expr(e) => {
            c.logical += 1;
            walk_expr(e, c);
        }
    }
}

fn walk_stmt(stmt: &Stmt, c: &mut LineCounts) {
    match stmt {
        Stmt::Block(_) | Stmt::Empty => {}
        _ => c.logical += 1,
    }
    match stmt {
        Stmt::Expr(e) | Stmt::Throw(e) => walk_expr(e, c),
        Stmt::VarDecl(decls) => {
            for (_, init) in decls.iter() {
                if let Some(e) = init {
                    walk_expr(e, c);
                }
            }
        }
        Stmt::FunctionDecl(f) => walk_function(f, c),
        Stmt::Return(arg) => {
            if let Some(e) = arg {
                walk_expr(e, c);
            }
        }
        Stmt::If { cond, then, alt } => {
            walk_expr(cond, c);
            walk_stmt(then, c);
            if let Some(alt) = alt {
                walk_stmt(alt, c);
            }
        }
        Stmt::Block(body) => {
            for s in body {
                walk_stmt(s, c);
            }
        }
        Stmt::While { cond, body } => {
            walk_expr(cond, c);
            walk_stmt(body, c);
        }
        Stmt::DoWhile { body, cond } => {
            walk_stmt(body, c);
            walk_expr(cond, c);
        }
        Stmt::For {
            init,
            cond,
            update,
            body,
        } => {
            if let Some(init) = init {
                walk_for_init(init, c);
            }
            if let Some(e) = cond {
                walk_expr(e, c);
            }
            if let Some(e) = update {
                walk_expr(e, c);
            }
            walk_stmt(body, c);
        }
        Stmt::ForIn { left, right, body } => {
            walk_for_init(left, c);
            walk_expr(right, c);
            walk_stmt(body, c);
        }
        Stmt::Switch { disc, cases } => {
            walk_expr(disc, c);
            for case in cases {
                if let Some(t) = &case.test {
                    walk_expr(t, c);
                }
                for s in &case.body {
                    walk_stmt(s, c);
                }
            }
        }
        Stmt::Try {
            block,
            catch,
            finally,
        } => {
            for s in block {
                walk_stmt(s, c);
            }
            if let Some((_, body)) = catch {
                for s in body {
                    walk_stmt(s, c);
                }
            }
            if let Some(body) = finally {
                for s in body {
                    walk_stmt(s, c);
                }
            }
        }
        Stmt::Labeled { body, .. } => walk_stmt(body, c),
        Stmt::With { obj, body } => {
            walk_expr(obj, c);
            walk_stmt(body, c);
        }
        Stmt::Break(_) | Stmt::Continue(_) | Stmt::Empty | Stmt::Debugger => {}
    }
}

fn walk_for_init(init: &ForInit, c: &mut LineCounts) {
    match init {
        ForInit::VarDecl(decls) => {
            for (_, e) in decls.iter() {
                if let Some(e) = e {
                    walk_expr(e, c);
                }
            }
        }
        ForInit::Expr(e) => walk_expr(e, c),
    }
}

fn walk_expr(expr: &Expr, c: &mut LineCounts) {
    match expr {
        Expr::Ident(_) | Expr::Literal(_) | Expr::This => {}
        Expr::Array(items) => {
            for e in items.iter().flatten() {
                walk_expr(e, c);
            }
        }
        Expr::Object(props) => {
            for p in props {
                match &p.value {
                    PropValue::Init(e) => walk_expr(e, c),
                    PropValue::Getter(f) | PropValue::Setter(f) => walk_function(f, c),
                }
            }
        }
        Expr::Function(f) | Expr::Arrow(f) => walk_function(f, c),
        Expr::Unary { operand, .. } | Expr::Update { operand, .. } => walk_expr(operand, c),
        Expr::Binary { left, right, .. } | Expr::Logical { left, right, .. } => {
            walk_expr(left, c);
            walk_expr(right, c);
        }
        Expr::Assign { target, value, .. } => {
            walk_expr(target, c);
            walk_expr(value, c);
        }
        Expr::Ternary { cond, then, alt } => {
            walk_expr(cond, c);
            walk_expr(then, c);
            walk_expr(alt, c);
        }
        Expr::Call { callee, args } | Expr::New { callee, args } => {
            walk_expr(callee, c);
            for a in args {
                walk_expr(a, c);
            }
        }
        Expr::Member { object, property } => {
            walk_expr(object, c);
            if let MemberProp::Computed(e) = property {
                walk_expr(e, c);
            }
        }
        Expr::Seq(items) => {
            for e in items {
                walk_expr(e, c);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_source_counts_zero() {
        assert_eq!(count_lines("").unwrap(), LineCounts::default());
    }

    #[test]
    fn blank_lines_separate_sloc_from_physical() {
        let c = count_lines("a = 1;\n\n  \nb = 2;").unwrap();
        assert_eq!(c.physical, 4);
        assert_eq!(c.sloc, 2);
        assert_eq!(c.logical, 2);
    }

    #[test]
    fn sloc_never_exceeds_physical() {
        let c = count_lines("var x = 1;\nif (x) { y(); }\n").unwrap();
        assert!(c.sloc <= c.physical);
    }

    #[test]
    fn minified_one_liner_has_many_logical_lines() {
        let c = count_lines("var a=1;var b=2;if(a){f();}while(b){b--;}").unwrap();
        assert_eq!(c.physical, 1);
        assert_eq!(c.sloc, 1);
        assert_eq!(c.logical, 6);
    }

    #[test]
    fn params_sum_over_all_functions() {
        let c = count_lines("function f(a, b) {} var g = function (x) {}; var h = (p, q, r) => p;")
            .unwrap();
        assert_eq!(c.params, 6);
    }
}
