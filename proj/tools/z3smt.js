#!/usr/bin/env node
// SPDX-License-Identifier: Apache-2.0
//
// Interactive SMT-LIB v2 front end for the bundled WASM build of Z3
// (third_party/z3wasm). Reads commands from stdin and evaluates them against
// one persistent solver context, so declarations, assertions and push/pop
// scopes behave like `z3 -in`.
//
// Commands are batched: input is buffered until a command that produces
// output (check-sat, get-value, ...) completes, then the whole batch goes
// through one eval call. Rapid sequences of small eval calls corrupt the
// wasm binding's input marshalling, and batching also cuts per-call
// overhead. Consequence: (error ...) reports for buffered commands only
// appear at the next flush, and :print-success is unsupported.

'use strict';

const path = require('path');

const pkgRoot = path.join(__dirname, '..', 'third_party', 'z3wasm', 'node_modules', 'z3-solver');

const kProducesOutput = /^\(\s*(check-sat|check-sat-assuming|get-|echo|simplify|display|eval)/;
const kExit = /^\(\s*exit\s*\)$/;

async function main() {
  const { init } = require(pkgRoot);
  const { Z3 } = await init();
  const cfg = Z3.mk_config();
  const ctx = Z3.mk_context(cfg);

  let buf = '';
  let pending = [];
  let sawExit = false;
  let closed = false;
  let processing = Promise.resolve();

  // splits off one complete top-level command, or null if incomplete
  function nextCommand() {
    let depth = 0;
    let start = -1;
    for (let i = 0; i < buf.length; i++) {
      const c = buf[i];
      if (c === ';') {
        while (i < buf.length && buf[i] !== '\n') i++;
        continue;
      }
      if (c === '"' || c === '|') {
        const q = c;
        i++;
        while (i < buf.length && buf[i] !== q) i++;
        continue;
      }
      if (c === '(') {
        if (depth === 0) start = i;
        depth++;
      } else if (c === ')') {
        depth--;
        if (depth === 0) {
          const cmd = buf.slice(start, i + 1);
          buf = buf.slice(i + 1);
          return cmd;
        }
      }
    }
    return null;
  }

  async function flush() {
    if (pending.length === 0) return;
    const batch = pending.join('\n');
    pending = [];
    let out;
    try {
      out = await Z3.eval_smtlib2_string(ctx, batch);
    } catch (e) {
      out = '(error "' + String(e).replace(/"/g, "'") + '")\n';
    }
    if (out && out.length > 0) process.stdout.write(out);
  }

  async function drain() {
    for (;;) {
      const cmd = nextCommand();
      if (cmd === null) break;
      if (kExit.test(cmd)) {
        sawExit = true;
        break;
      }
      pending.push(cmd);
      if (kProducesOutput.test(cmd)) await flush();
    }
    if (sawExit || closed) {
      await flush();
      process.exit(0);
    }
  }

  process.stdin.setEncoding('utf8');
  process.stdin.on('data', (chunk) => {
    buf += chunk;
    processing = processing.then(drain);
  });
  process.stdin.on('end', () => {
    closed = true;
    processing = processing.then(drain);
  });
}

main().catch((e) => {
  process.stderr.write('z3smt: ' + String(e) + '\n');
  process.exit(1);
});
