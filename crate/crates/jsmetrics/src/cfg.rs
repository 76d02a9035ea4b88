//! Control-flow summary: edge/node/component counts per program.
//!
//! One connected component is built per function body, plus one for any
//! executable top-level code (a program consisting solely of function
//! declarations contributes no top-level component). Within a component,
//! straight-line statements extend a chain; branch constructs add the usual
//! diamond/loop shapes. Short-circuit operators and ternaries inside
//! expressions add one decision each.

use crate::ast::*;
use crate::error::ParseError;
use crate::parser::parse;

/// Aggregate control-flow graph counts for a whole program.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CfgSummary {
    pub edges: u64,
    pub nodes: u64,
    pub components: u64,
}

impl CfgSummary {
    /// Cyclomatic complexity `M = E + 2Q - N`.
    pub fn cyclomatic(&self) -> u64 {
        (self.edges + 2 * self.components).saturating_sub(self.nodes)
    }
}

pub fn build_cfg_summary(source: &str) -> Result<CfgSummary, ParseError> {
    let program = parse(source)?;
    Ok(summarize(&program))
}

pub fn summarize(program: &Program) -> CfgSummary {
    let mut total = CfgSummary::default();
    let has_toplevel_code = program
        .body
        .iter()
        .any(|s| !matches!(s, Stmt::FunctionDecl(_)));
    if has_toplevel_code {
        let mut c = Component::new();
        for stmt in &program.body {
            c.stmt(stmt, &mut total);
        }
        c.finish(&mut total);
    } else {
        // only declarations: still visit them so nested functions are counted
        for stmt in &program.body {
            if let Stmt::FunctionDecl(f) = stmt {
                component_for_function(f, &mut total);
            }
        }
    }
    total
}

fn component_for_function(f: &Function, total: &mut CfgSummary) {
    let mut c = Component::new();
    match &f.body {
        FunctionBody::Block(stmts) => {
            for s in stmts {
                c.stmt(s, total);
            }
        }
        FunctionBody::Expr(e) => c.expr(e, total),
    }
    c.finish(total);
}

/// Edge/node counters for one connected component. The entry block is the
/// initial node; each construct records its own node and edge increments.
struct Component {
    nodes: u64,
    edges: u64,
}

impl Component {
    fn new() -> Self {
        Component { nodes: 1, edges: 0 }
    }

    fn finish(self, total: &mut CfgSummary) {
        total.nodes += self.nodes;
        total.edges += self.edges;
        total.components += 1;
    }

    /// A plain statement appends one block to the chain.
    fn chain(&mut self) {
        self.nodes += 1;
        self.edges += 1;
    }

    /// A two-way branch: condition fans out to a new block and a merge.
    fn branch(&mut self) {
        self.nodes += 2;
        self.edges += 3;
    }

    fn stmt(&mut self, stmt: &Stmt, total: &mut CfgSummary) {
        match stmt {
            Stmt::Expr(e) => {
                self.chain();
                self.expr(e, total);
            }
            Stmt::VarDecl(decls) => {
                self.chain();
                for (_, init) in decls {
                    if let Some(e) = init {
                        self.expr(e, total);
                    }
                }
            }
            Stmt::FunctionDecl(f) => component_for_function(f, total),
            Stmt::Return(arg) => {
                self.chain();
                if let Some(e) = arg {
                    self.expr(e, total);
                }
            }
            Stmt::Throw(e) => {
                self.chain();
                self.expr(e, total);
            }
            Stmt::Break(_) | Stmt::Continue(_) | Stmt::Debugger => self.chain(),
            Stmt::Empty => {}
            Stmt::Block(body) => {
                for s in body {
                    self.stmt(s, total);
                }
            }
            Stmt::If { cond, then, alt } => {
                self.expr(cond, total);
                match alt {
                    None => {
                        // cond -> then, cond -> merge, then -> merge
                        self.branch();
                        self.stmt(then, total);
                    }
                    Some(alt) => {
                        // cond -> then/else, both -> merge
                        self.nodes += 3;
                        self.edges += 4;
                        self.stmt(then, total);
                        self.stmt(alt, total);
                    }
                }
            }
            Stmt::While { cond, body } => {
                self.expr(cond, total);
                self.loop_shape(true);
                self.stmt(body, total);
            }
            Stmt::DoWhile { body, cond } => {
                self.expr(cond, total);
                self.loop_shape(true);
                self.stmt(body, total);
            }
            Stmt::For {
                init,
                cond,
                update,
                body,
            } => {
                if let Some(init) = init {
                    self.for_init(init, total);
                }
                if let Some(c) = cond {
                    self.expr(c, total);
                }
                if let Some(u) = update {
                    self.expr(u, total);
                }
                // a for without a condition loops unconditionally: no exit
                // decision, so no extra edge
                self.loop_shape(cond.is_some());
                self.stmt(body, total);
            }
            Stmt::ForIn { left, right, body } => {
                self.for_init(left, total);
                self.expr(right, total);
                self.loop_shape(true);
                self.stmt(body, total);
            }
            Stmt::Switch { disc, cases } => {
                self.expr(disc, total);
                let k = cases.iter().filter(|c| c.test.is_some()).count() as u64;
                let has_default = cases.iter().any(|c| c.test.is_none());
                let d = u64::from(has_default);
                // head + case bodies + exit, dispatch edges + fallthroughs
                self.nodes += k + d + 1;
                self.edges += 2 * k + d + 1;
                for case in cases {
                    if let Some(t) = &case.test {
                        self.expr(t, total);
                    }
                    for s in &case.body {
                        self.stmt(s, total);
                    }
                }
            }
            Stmt::Try {
                block,
                catch,
                finally,
            } => {
                self.chain(); // the protected region
                for s in block {
                    self.stmt(s, total);
                }
                if let Some((_, body)) = catch {
                    // try -> catch, try -> after, catch -> after
                    self.branch();
                    for s in body {
                        self.stmt(s, total);
                    }
                }
                if let Some(body) = finally {
                    self.chain();
                    for s in body {
                        self.stmt(s, total);
                    }
                }
            }
            Stmt::Labeled { body, .. } => self.stmt(body, total),
            Stmt::With { obj, body } => {
                self.chain();
                self.expr(obj, total);
                self.stmt(body, total);
            }
        }
    }

    /// head -> body, body -> head, and (when conditional) head -> exit.
    fn loop_shape(&mut self, conditional: bool) {
        self.nodes += 3;
        self.edges += if conditional { 4 } else { 3 };
    }

    fn for_init(&mut self, init: &ForInit, total: &mut CfgSummary) {
        match init {
            ForInit::VarDecl(decls) => {
                for (_, e) in decls {
                    if let Some(e) = e {
                        self.expr(e, total);
                    }
                }
            }
            ForInit::Expr(e) => self.expr(e, total),
        }
    }

    fn expr(&mut self, expr: &Expr, total: &mut CfgSummary) {
        match expr {
            Expr::Ident(_) | Expr::Literal(_) | Expr::This => {}
            Expr::Array(items) => {
                for e in items.iter().flatten() {
                    self.expr(e, total);
                }
            }
            Expr::Object(props) => {
                for p in props {
                    match &p.value {
                        PropValue::Init(e) => self.expr(e, total),
                        PropValue::Getter(f) | PropValue::Setter(f) => {
                            component_for_function(f, total)
                        }
                    }
                }
            }
            Expr::Function(f) | Expr::Arrow(f) => component_for_function(f, total),
            Expr::Unary { operand, .. } | Expr::Update { operand, .. } => {
                self.expr(operand, total)
            }
            Expr::Binary { left, right, .. } => {
                self.expr(left, total);
                self.expr(right, total);
            }
            Expr::Logical { left, right, .. } => {
                // short-circuit: evaluate-rhs block plus skip edge
                self.branch();
                self.expr(left, total);
                self.expr(right, total);
            }
            Expr::Assign { target, value, .. } => {
                self.expr(target, total);
                self.expr(value, total);
            }
            Expr::Ternary { cond, then, alt } => {
                self.nodes += 3;
                self.edges += 4;
                self.expr(cond, total);
                self.expr(then, total);
                self.expr(alt, total);
            }
            Expr::Call { callee, args } | Expr::New { callee, args } => {
                self.expr(callee, total);
                for a in args {
                    self.expr(a, total);
                }
            }
            Expr::Member { object, property } => {
                self.expr(object, total);
                if let MemberProp::Computed(e) = property {
                    self.expr(e, total);
                }
            }
            Expr::Seq(items) => {
                for e in items {
                    self.expr(e, total);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(src: &str) -> u64 {
        build_cfg_summary(src).unwrap().cyclomatic()
    }

    #[test]
    fn empty_program_has_no_components() {
        let s = build_cfg_summary("").unwrap();
        assert_eq!(s, CfgSummary::default());
    }

    #[test]
    fn straight_line_code_has_complexity_one() {
        assert_eq!(m("a = 1; b = a + 2; log(b);"), 1);
        assert_eq!(m("function f() { a = 1; b = 2; return b; }"), 1);
    }

    #[test]
    fn single_if_else_in_function_is_two() {
        assert_eq!(m("function f(x) { if (x) { return 1; } else { return 2; } }"), 2);
    }

    #[test]
    fn two_functions_with_one_while_each_total_four() {
        let src = "function f() { while (a) { work(); } }\nfunction g() { while (b) { rest(); } }";
        let s = build_cfg_summary(src).unwrap();
        assert_eq!(s.components, 2);
        assert_eq!(s.cyclomatic(), 4);
    }

    #[test]
    fn linear_chain_satisfies_e_equals_n_minus_one() {
        let s = build_cfg_summary("a = 1; b = 2; c = 3;").unwrap();
        assert_eq!(s.components, 1);
        assert_eq!(s.edges, s.nodes - 1);
    }

    #[test]
    fn decision_constructs_each_add_one() {
        let base = m("x = 1;");
        assert_eq!(m("x = 1; if (a) {}"), base + 1);
        assert_eq!(m("x = 1; while (a) {}"), base + 1);
        assert_eq!(m("x = 1; do {} while (a);"), base + 1);
        assert_eq!(m("x = 1; for (i = 0; i < 3; i++) {}"), base + 1);
        assert_eq!(m("x = 1; for (k in o) {}"), base + 1);
        assert_eq!(m("x = 1; try { f(); } catch (e) {}"), base + 1);
        assert_eq!(m("x = a ? b : c;"), base + 1);
        assert_eq!(m("x = a && b;"), base + 1);
        assert_eq!(m("x = a || b;"), base + 1);
    }

    #[test]
    fn unconditional_for_adds_nothing() {
        assert_eq!(m("x = 1; for (;;) { break; }"), 1);
    }

    #[test]
    fn switch_counts_cases_not_default() {
        assert_eq!(m("switch (x) { case 1: a(); case 2: b(); default: c(); }"), 3);
        assert_eq!(m("switch (x) { default: c(); }"), 1);
    }

    #[test]
    fn nested_functions_are_separate_components() {
        let src = "function outer() { var inner = function () { if (x) y(); }; inner(); }";
        let s = build_cfg_summary(src).unwrap();
        assert_eq!(s.components, 2);
        assert_eq!(s.cyclomatic(), 3);
    }

    #[test]
    fn components_have_at_least_one_node_each() {
        let s = build_cfg_summary("function f() {} var x = 1;").unwrap();
        assert!(s.nodes >= s.components);
        assert_eq!(s.components, 2);
    }
}
