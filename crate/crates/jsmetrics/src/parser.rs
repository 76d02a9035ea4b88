//! Recursive-descent parser for ES5 plus arrow functions, with automatic
//! semicolon insertion. Anything outside that grammar is a `ParseError`.

use crate::ast::*;
use crate::error::ParseError;
use crate::lexer::{Lexer, Token, TokenKind};

pub fn parse(source: &str) -> Result<Program, ParseError> {
    let tokens = Lexer::new(source).tokenize()?;
    let mut p = Parser { tokens, pos: 0 };
    let mut body = Vec::new();
    while !p.at_eof() {
        body.push(p.statement()?);
    }
    Ok(Program { body })
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn cur(&self) -> &Token {
        &self.tokens[self.pos]
    }

    fn at(&self, off: usize) -> &Token {
        &self.tokens[(self.pos + off).min(self.tokens.len() - 1)]
    }

    fn at_eof(&self) -> bool {
        self.cur().kind == TokenKind::Eof
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        let t = self.cur();
        ParseError::new(t.line, t.col, msg)
    }

    fn eat_punct(&mut self, s: &str) -> bool {
        if self.cur().is_punct(s) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect_punct(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat_punct(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{}', found '{}'", s, self.cur().lexeme)))
        }
    }

    fn eat_keyword(&mut self, s: &str) -> bool {
        if self.cur().is_keyword(s) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect_ident(&mut self) -> Result<String, ParseError> {
        if self.cur().kind == TokenKind::Ident {
            Ok(self.advance().lexeme)
        } else {
            Err(self.error(format!("expected identifier, found '{}'", self.cur().lexeme)))
        }
    }

    /// Statement terminator with automatic semicolon insertion: an explicit
    /// `;`, or a virtual one before `}`, at end of input, or after a line
    /// break.
    fn eat_semicolon(&mut self) -> Result<(), ParseError> {
        if self.eat_punct(";") {
            return Ok(());
        }
        if self.cur().is_punct("}") || self.at_eof() || self.cur().newline_before {
            return Ok(());
        }
        Err(self.error(format!("expected ';', found '{}'", self.cur().lexeme)))
    }

    // ----- statements -------------------------------------------------------

    fn statement(&mut self) -> Result<Stmt, ParseError> {
        let t = self.cur().clone();
        match t.kind {
            TokenKind::Punct if t.lexeme == "{" => {
                self.advance();
                let body = self.statement_list("}")?;
                self.expect_punct("}")?;
                Ok(Stmt::Block(body))
            }
            TokenKind::Punct if t.lexeme == ";" => {
                self.advance();
                Ok(Stmt::Empty)
            }
            TokenKind::Keyword => match t.lexeme.as_str() {
                "var" | "let" | "const" => {
                    self.advance();
                    let decls = self.var_declarations(true)?;
                    self.eat_semicolon()?;
                    Ok(Stmt::VarDecl(decls))
                }
                "function" => {
                    self.advance();
                    let f = self.function_rest(true)?;
                    Ok(Stmt::FunctionDecl(f))
                }
                "if" => self.if_statement(),
                "while" => {
                    self.advance();
                    self.expect_punct("(")?;
                    let cond = self.expression(true)?;
                    self.expect_punct(")")?;
                    let body = Box::new(self.statement()?);
                    Ok(Stmt::While { cond, body })
                }
                "do" => {
                    self.advance();
                    let body = Box::new(self.statement()?);
                    if !self.eat_keyword("while") {
                        return Err(self.error("expected 'while' after do body"));
                    }
                    self.expect_punct("(")?;
                    let cond = self.expression(true)?;
                    self.expect_punct(")")?;
                    self.eat_punct(";");
                    Ok(Stmt::DoWhile { body, cond })
                }
                "for" => self.for_statement(),
                "return" => {
                    self.advance();
                    let arg = if self.cur().is_punct(";")
                        || self.cur().is_punct("}")
                        || self.at_eof()
                        || self.cur().newline_before
                    {
                        None
                    } else {
                        Some(self.expression(true)?)
                    };
                    self.eat_semicolon()?;
                    Ok(Stmt::Return(arg))
                }
                "break" | "continue" => {
                    self.advance();
                    let label = if self.cur().kind == TokenKind::Ident && !self.cur().newline_before
                    {
                        Some(self.advance().lexeme)
                    } else {
                        None
                    };
                    self.eat_semicolon()?;
                    if t.lexeme == "break" {
                        Ok(Stmt::Break(label))
                    } else {
                        Ok(Stmt::Continue(label))
                    }
                }
                "switch" => self.switch_statement(),
                "try" => self.try_statement(),
                "throw" => {
                    self.advance();
                    if self.cur().newline_before {
                        return Err(self.error("line break not allowed after 'throw'"));
                    }
                    let arg = self.expression(true)?;
                    self.eat_semicolon()?;
                    Ok(Stmt::Throw(arg))
                }
                "with" => {
                    self.advance();
                    self.expect_punct("(")?;
                    let obj = self.expression(true)?;
                    self.expect_punct(")")?;
                    let body = Box::new(self.statement()?);
                    Ok(Stmt::With { obj, body })
                }
                "debugger" => {
                    self.advance();
                    self.eat_semicolon()?;
                    Ok(Stmt::Debugger)
                }
                other => Err(self.error(format!("unexpected keyword '{other}'"))),
            },
            TokenKind::Ident if self.at(1).is_punct(":") => {
                let label = self.advance().lexeme;
                self.advance(); // ':'
                let body = Box::new(self.statement()?);
                Ok(Stmt::Labeled { label, body })
            }
            _ => {
                let expr = self.expression(true)?;
                self.eat_semicolon()?;
                Ok(Stmt::Expr(expr))
            }
        }
    }

    fn statement_list(&mut self, terminator: &str) -> Result<Vec<Stmt>, ParseError> {
        let mut out = Vec::new();
        while !self.cur().is_punct(terminator) {
            if self.at_eof() {
                return Err(self.error(format!("expected '{terminator}'")));
            }
            out.push(self.statement()?);
        }
        Ok(out)
    }

    fn var_declarations(&mut self, allow_in: bool) -> Result<Vec<(String, Option<Expr>)>, ParseError> {
        let mut decls = Vec::new();
        loop {
            let name = self.expect_ident()?;
            let init = if self.eat_punct("=") {
                Some(self.assignment(allow_in)?)
            } else {
                None
            };
            decls.push((name, init));
            if !self.eat_punct(",") {
                break;
            }
        }
        Ok(decls)
    }

    fn if_statement(&mut self) -> Result<Stmt, ParseError> {
        self.advance(); // 'if'
        self.expect_punct("(")?;
        let cond = self.expression(true)?;
        self.expect_punct(")")?;
        let then = Box::new(self.statement()?);
        let alt = if self.eat_keyword("else") {
            Some(Box::new(self.statement()?))
        } else {
            None
        };
        Ok(Stmt::If { cond, then, alt })
    }

    fn for_statement(&mut self) -> Result<Stmt, ParseError> {
        self.advance(); // 'for'
        self.expect_punct("(")?;

        let init = if self.cur().is_punct(";") {
            None
        } else if matches!(self.cur().lexeme.as_str(), "var" | "let" | "const")
            && self.cur().kind == TokenKind::Keyword
        {
            self.advance();
            Some(ForInit::VarDecl(self.var_declarations(false)?))
        } else {
            Some(ForInit::Expr(self.expression(false)?))
        };

        if self.eat_keyword("in") {
            let left = init.ok_or_else(|| self.error("missing loop variable before 'in'"))?;
            let right = self.expression(true)?;
            self.expect_punct(")")?;
            let body = Box::new(self.statement()?);
            return Ok(Stmt::ForIn { left, right, body });
        }

        self.expect_punct(";")?;
        let cond = if self.cur().is_punct(";") {
            None
        } else {
            Some(self.expression(true)?)
        };
        self.expect_punct(";")?;
        let update = if self.cur().is_punct(")") {
            None
        } else {
            Some(self.expression(true)?)
        };
        self.expect_punct(")")?;
        let body = Box::new(self.statement()?);
        Ok(Stmt::For {
            init,
            cond,
            update,
            body,
        })
    }

    fn switch_statement(&mut self) -> Result<Stmt, ParseError> {
        self.advance(); // 'switch'
        self.expect_punct("(")?;
        let disc = self.expression(true)?;
        self.expect_punct(")")?;
        self.expect_punct("{")?;
        let mut cases = Vec::new();
        while !self.cur().is_punct("}") {
            let test = if self.eat_keyword("case") {
                let e = self.expression(true)?;
                Some(e)
            } else if self.eat_keyword("default") {
                None
            } else {
                return Err(self.error("expected 'case' or 'default'"));
            };
            self.expect_punct(":")?;
            let mut body = Vec::new();
            while !self.cur().is_punct("}")
                && !self.cur().is_keyword("case")
                && !self.cur().is_keyword("default")
            {
                body.push(self.statement()?);
            }
            cases.push(SwitchCase { test, body });
        }
        self.expect_punct("}")?;
        Ok(Stmt::Switch { disc, cases })
    }

    fn try_statement(&mut self) -> Result<Stmt, ParseError> {
        self.advance(); // 'try'
        self.expect_punct("{")?;
        let block = self.statement_list("}")?;
        self.expect_punct("}")?;
        let catch = if self.eat_keyword("catch") {
            self.expect_punct("(")?;
            let param = self.expect_ident()?;
            self.expect_punct(")")?;
            self.expect_punct("{")?;
            let body = self.statement_list("}")?;
            self.expect_punct("}")?;
            Some((param, body))
        } else {
            None
        };
        let finally = if self.eat_keyword("finally") {
            self.expect_punct("{")?;
            let body = self.statement_list("}")?;
            self.expect_punct("}")?;
            Some(body)
        } else {
            None
        };
        if catch.is_none() && finally.is_none() {
            return Err(self.error("try requires catch or finally"));
        }
        Ok(Stmt::Try {
            block,
            catch,
            finally,
        })
    }

    /// Parse `function` after the keyword has been consumed.
    fn function_rest(&mut self, require_name: bool) -> Result<Function, ParseError> {
        let name = if self.cur().kind == TokenKind::Ident {
            Some(self.advance().lexeme)
        } else if require_name {
            return Err(self.error("function declaration requires a name"));
        } else {
            None
        };
        self.expect_punct("(")?;
        let params = self.param_list()?;
        self.expect_punct("{")?;
        let body = self.statement_list("}")?;
        self.expect_punct("}")?;
        Ok(Function {
            name,
            params,
            body: FunctionBody::Block(body),
        })
    }

    fn param_list(&mut self) -> Result<Vec<String>, ParseError> {
        let mut params = Vec::new();
        if !self.cur().is_punct(")") {
            loop {
                params.push(self.expect_ident()?);
                if !self.eat_punct(",") {
                    break;
                }
            }
        }
        self.expect_punct(")")?;
        Ok(params)
    }

    // ----- expressions ------------------------------------------------------

    fn expression(&mut self, allow_in: bool) -> Result<Expr, ParseError> {
        let first = self.assignment(allow_in)?;
        if !self.cur().is_punct(",") {
            return Ok(first);
        }
        let mut items = vec![first];
        while self.eat_punct(",") {
            items.push(self.assignment(allow_in)?);
        }
        Ok(Expr::Seq(items))
    }

    /// Look ahead from a `(` at the current position: does the matching `)`
    /// have `=>` right after it? Decides arrow parameters vs grouping.
    fn paren_starts_arrow(&self) -> bool {
        debug_assert!(self.cur().is_punct("("));
        let mut depth = 0usize;
        let mut i = self.pos;
        while i < self.tokens.len() {
            let t = &self.tokens[i];
            if t.kind == TokenKind::Punct {
                match t.lexeme.as_str() {
                    "(" => depth += 1,
                    ")" => {
                        depth -= 1;
                        if depth == 0 {
                            return self.tokens.get(i + 1).is_some_and(|n| n.is_punct("=>"));
                        }
                    }
                    _ => {}
                }
            }
            if t.kind == TokenKind::Eof {
                return false;
            }
            i += 1;
        }
        false
    }

    fn assignment(&mut self, allow_in: bool) -> Result<Expr, ParseError> {
        // ident => body
        if self.cur().kind == TokenKind::Ident && self.at(1).is_punct("=>") {
            let param = self.advance().lexeme;
            self.advance(); // '=>'
            return self.arrow_body(vec![param]);
        }
        // ( params ) => body
        if self.cur().is_punct("(") && self.paren_starts_arrow() {
            self.advance(); // '('
            let params = self.param_list()?;
            self.expect_punct("=>")?;
            return self.arrow_body(params);
        }

        let left = self.conditional(allow_in)?;
        const ASSIGN_OPS: &[&str] = &[
            "=", "+=", "-=", "*=", "/=", "%=", "<<=", ">>=", ">>>=", "&=", "|=", "^=",
        ];
        for op in ASSIGN_OPS {
            if self.cur().is_punct(op) {
                self.advance();
                let value = self.assignment(allow_in)?;
                return Ok(Expr::Assign {
                    op: (*op).to_string(),
                    target: Box::new(left),
                    value: Box::new(value),
                });
            }
        }
        Ok(left)
    }

    fn arrow_body(&mut self, params: Vec<String>) -> Result<Expr, ParseError> {
        let body = if self.cur().is_punct("{") {
            self.advance();
            let stmts = self.statement_list("}")?;
            self.expect_punct("}")?;
            FunctionBody::Block(stmts)
        } else {
            FunctionBody::Expr(Box::new(self.assignment(true)?))
        };
        Ok(Expr::Arrow(Function {
            name: None,
            params,
            body,
        }))
    }

    fn conditional(&mut self, allow_in: bool) -> Result<Expr, ParseError> {
        let cond = self.binary(0, allow_in)?;
        if self.eat_punct("?") {
            let then = self.assignment(true)?;
            self.expect_punct(":")?;
            let alt = self.assignment(allow_in)?;
            return Ok(Expr::Ternary {
                cond: Box::new(cond),
                then: Box::new(then),
                alt: Box::new(alt),
            });
        }
        Ok(cond)
    }

    fn binary_prec(&self, allow_in: bool) -> Option<(u8, &'static str, bool)> {
        let t = self.cur();
        let table: &[(&str, u8, bool)] = &[
            ("||", 1, true),
            ("&&", 2, true),
            ("|", 3, false),
            ("^", 4, false),
            ("&", 5, false),
            ("==", 6, false),
            ("!=", 6, false),
            ("===", 6, false),
            ("!==", 6, false),
            ("<", 7, false),
            (">", 7, false),
            ("<=", 7, false),
            (">=", 7, false),
            ("<<", 8, false),
            (">>", 8, false),
            (">>>", 8, false),
            ("+", 9, false),
            ("-", 9, false),
            ("*", 10, false),
            ("/", 10, false),
            ("%", 10, false),
        ];
        if t.kind == TokenKind::Punct {
            for (op, prec, logical) in table {
                if t.lexeme == *op {
                    return Some((*prec, op, *logical));
                }
            }
        }
        if t.is_keyword("instanceof") {
            return Some((7, "instanceof", false));
        }
        if allow_in && t.is_keyword("in") {
            return Some((7, "in", false));
        }
        None
    }

    fn binary(&mut self, min_prec: u8, allow_in: bool) -> Result<Expr, ParseError> {
        let mut left = self.unary(allow_in)?;
        while let Some((prec, op, logical)) = self.binary_prec(allow_in) {
            if prec < min_prec {
                break;
            }
            self.advance();
            let right = self.binary(prec + 1, allow_in)?;
            left = if logical {
                Expr::Logical {
                    op: op.to_string(),
                    left: Box::new(left),
                    right: Box::new(right),
                }
            } else {
                Expr::Binary {
                    op: op.to_string(),
                    left: Box::new(left),
                    right: Box::new(right),
                }
            };
        }
        Ok(left)
    }

    fn unary(&mut self, allow_in: bool) -> Result<Expr, ParseError> {
        let t = self.cur().clone();
        let unary_kw = t.kind == TokenKind::Keyword
            && matches!(t.lexeme.as_str(), "delete" | "void" | "typeof");
        let unary_punct =
            t.kind == TokenKind::Punct && matches!(t.lexeme.as_str(), "+" | "-" | "~" | "!");
        if unary_kw || unary_punct {
            self.advance();
            let operand = self.unary(allow_in)?;
            return Ok(Expr::Unary {
                op: t.lexeme,
                operand: Box::new(operand),
            });
        }
        if t.is_punct("++") || t.is_punct("--") {
            self.advance();
            let operand = self.unary(allow_in)?;
            return Ok(Expr::Update {
                op: t.lexeme,
                prefix: true,
                operand: Box::new(operand),
            });
        }
        self.postfix(allow_in)
    }

    fn postfix(&mut self, allow_in: bool) -> Result<Expr, ParseError> {
        let expr = self.left_hand_side(allow_in)?;
        let t = self.cur();
        if (t.is_punct("++") || t.is_punct("--")) && !t.newline_before {
            let op = self.advance().lexeme;
            return Ok(Expr::Update {
                op,
                prefix: false,
                operand: Box::new(expr),
            });
        }
        Ok(expr)
    }

    fn left_hand_side(&mut self, allow_in: bool) -> Result<Expr, ParseError> {
        let mut expr = if self.cur().is_keyword("new") {
            self.new_expression(allow_in)?
        } else {
            self.primary(allow_in)?
        };
        loop {
            if self.eat_punct(".") {
                let name = self.property_name()?;
                expr = Expr::Member {
                    object: Box::new(expr),
                    property: MemberProp::Dot(name),
                };
            } else if self.cur().is_punct("[") {
                self.advance();
                let idx = self.expression(true)?;
                self.expect_punct("]")?;
                expr = Expr::Member {
                    object: Box::new(expr),
                    property: MemberProp::Computed(Box::new(idx)),
                };
            } else if self.cur().is_punct("(") {
                let args = self.arguments()?;
                expr = Expr::Call {
                    callee: Box::new(expr),
                    args,
                };
            } else {
                return Ok(expr);
            }
        }
    }

    fn new_expression(&mut self, allow_in: bool) -> Result<Expr, ParseError> {
        self.advance(); // 'new'
        let mut callee = if self.cur().is_keyword("new") {
            self.new_expression(allow_in)?
        } else {
            self.primary(allow_in)?
        };
        // member accesses bind tighter than the `new` argument list
        loop {
            if self.eat_punct(".") {
                let name = self.property_name()?;
                callee = Expr::Member {
                    object: Box::new(callee),
                    property: MemberProp::Dot(name),
                };
            } else if self.cur().is_punct("[") {
                self.advance();
                let idx = self.expression(true)?;
                self.expect_punct("]")?;
                callee = Expr::Member {
                    object: Box::new(callee),
                    property: MemberProp::Computed(Box::new(idx)),
                };
            } else {
                break;
            }
        }
        let args = if self.cur().is_punct("(") {
            self.arguments()?
        } else {
            Vec::new()
        };
        Ok(Expr::New {
            callee: Box::new(callee),
            args,
        })
    }

    /// After `.`: any identifier name, including reserved words.
    fn property_name(&mut self) -> Result<String, ParseError> {
        let t = self.cur().clone();
        if t.kind == TokenKind::Ident || t.kind == TokenKind::Keyword {
            self.advance();
            Ok(t.lexeme)
        } else {
            Err(self.error(format!("expected property name, found '{}'", t.lexeme)))
        }
    }

    fn arguments(&mut self) -> Result<Vec<Expr>, ParseError> {
        self.expect_punct("(")?;
        let mut args = Vec::new();
        if !self.cur().is_punct(")") {
            loop {
                args.push(self.assignment(true)?);
                if !self.eat_punct(",") {
                    break;
                }
            }
        }
        self.expect_punct(")")?;
        Ok(args)
    }

    fn primary(&mut self, _allow_in: bool) -> Result<Expr, ParseError> {
        let t = self.cur().clone();
        match t.kind {
            TokenKind::Ident => {
                self.advance();
                match t.lexeme.as_str() {
                    "true" => Ok(Expr::Literal(Literal::Bool(true))),
                    "false" => Ok(Expr::Literal(Literal::Bool(false))),
                    "null" => Ok(Expr::Literal(Literal::Null)),
                    "this" => Ok(Expr::This),
                    _ => Ok(Expr::Ident(t.lexeme)),
                }
            }
            TokenKind::Number => {
                self.advance();
                Ok(Expr::Literal(Literal::Number(t.lexeme)))
            }
            TokenKind::Str => {
                self.advance();
                Ok(Expr::Literal(Literal::Str(t.lexeme)))
            }
            TokenKind::Regex => {
                self.advance();
                Ok(Expr::Literal(Literal::Regex(t.lexeme)))
            }
            TokenKind::Punct => match t.lexeme.as_str() {
                "(" => {
                    self.advance();
                    let e = self.expression(true)?;
                    self.expect_punct(")")?;
                    Ok(e)
                }
                "[" => self.array_literal(),
                "{" => self.object_literal(),
                _ => Err(self.error(format!("unexpected token '{}'", t.lexeme))),
            },
            TokenKind::Keyword if t.lexeme == "function" => {
                self.advance();
                Ok(Expr::Function(self.function_rest(false)?))
            }
            _ => Err(self.error(format!("unexpected token '{}'", t.lexeme))),
        }
    }

    fn array_literal(&mut self) -> Result<Expr, ParseError> {
        self.advance(); // '['
        let mut items = Vec::new();
        loop {
            if self.cur().is_punct("]") {
                break;
            }
            if self.eat_punct(",") {
                items.push(None); // elision
                continue;
            }
            items.push(Some(self.assignment(true)?));
            if !self.eat_punct(",") {
                break;
            }
        }
        self.expect_punct("]")?;
        Ok(Expr::Array(items))
    }

    fn object_literal(&mut self) -> Result<Expr, ParseError> {
        self.advance(); // '{'
        let mut props = Vec::new();
        while !self.cur().is_punct("}") {
            let t = self.cur().clone();
            // ES5 accessor: get/set name() { ... }
            if t.kind == TokenKind::Ident
                && (t.lexeme == "get" || t.lexeme == "set")
                && !self.at(1).is_punct(":")
                && !self.at(1).is_punct(",")
                && !self.at(1).is_punct("}")
                && !self.at(1).is_punct("(")
            {
                self.advance();
                let key = self.object_key()?;
                self.expect_punct("(")?;
                let params = self.param_list()?;
                self.expect_punct("{")?;
                let body = self.statement_list("}")?;
                self.expect_punct("}")?;
                let f = Function {
                    name: None,
                    params,
                    body: FunctionBody::Block(body),
                };
                let value = if t.lexeme == "get" {
                    PropValue::Getter(f)
                } else {
                    PropValue::Setter(f)
                };
                props.push(Property { key, value });
            } else {
                let key = self.object_key()?;
                self.expect_punct(":")?;
                let value = self.assignment(true)?;
                props.push(Property {
                    key,
                    value: PropValue::Init(value),
                });
            }
            if !self.eat_punct(",") {
                break;
            }
        }
        self.expect_punct("}")?;
        Ok(Expr::Object(props))
    }

    fn object_key(&mut self) -> Result<String, ParseError> {
        let t = self.cur().clone();
        match t.kind {
            TokenKind::Ident | TokenKind::Keyword | TokenKind::Number | TokenKind::Str => {
                self.advance();
                Ok(t.lexeme)
            }
            _ => Err(self.error(format!("expected property key, found '{}'", t.lexeme))),
        }
    }
}
