import init, { spectrum_json, theta_json, trace_power_json } from "./pkg/thetalab_web.js";

const $ = (id) => document.getElementById(id);

const PRESETS = {
  c5: "n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n",
  c7: "n 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n",
  petersen: "n 10\n0 1\n1 2\n2 3\n3 4\n4 0\n0 5\n1 6\n2 7\n3 8\n4 9\n5 7\n7 9\n9 6\n6 8\n8 5\n",
};

function call(fn, ...args) {
  const value = JSON.parse(fn(...args));
  if (value.error) throw new Error(value.error);
  return value;
}

function show(el, lines) {
  el.innerHTML = lines.join("\n");
}

const verdict = (ok) => (ok ? '<span class="ok">yes</span>' : '<span class="bad">no</span>');

function plotSpectrum(canvas, eig, bound) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const top = Math.max(eig[0], bound) * 1.05;
  const y = (v) => h / 2 - (v / top) * (h / 2 - 10);
  ctx.strokeStyle = "#999";
  ctx.beginPath();
  ctx.moveTo(0, y(0));
  ctx.lineTo(w, y(0));
  ctx.stroke();
  ctx.strokeStyle = "#b3261e";
  ctx.setLineDash([5, 4]);
  for (const b of [bound, -bound]) {
    ctx.beginPath();
    ctx.moveTo(0, y(b));
    ctx.lineTo(w, y(b));
    ctx.stroke();
  }
  ctx.setLineDash([]);
  const step = (w - 20) / Math.max(1, eig.length - 1);
  eig.forEach((v, i) => {
    ctx.fillStyle = i === 0 ? "#1f5fbf" : "#333";
    ctx.beginPath();
    ctx.arc(10 + i * step, y(v), 3, 0, 2 * Math.PI);
    ctx.fill();
  });
}

function drawGraph(canvas, n, edges) {
  const ctx = canvas.getContext("2d");
  const { width: w, height: h } = canvas;
  ctx.clearRect(0, 0, w, h);
  const r = Math.min(w, h) / 2 - 20;
  const pos = Array.from({ length: n }, (_, i) => {
    const a = (2 * Math.PI * i) / n - Math.PI / 2;
    return [w / 2 + r * Math.cos(a), h / 2 + r * Math.sin(a)];
  });
  ctx.strokeStyle = "#777";
  for (const [u, v] of edges) {
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  ctx.fillStyle = "#1f5fbf";
  for (const [x, y] of pos) {
    ctx.beginPath();
    ctx.arc(x, y, 5, 0, 2 * Math.PI);
    ctx.fill();
  }
}

function runSpectrum() {
  const out = $("sp-out");
  try {
    const s = call(spectrum_json, $("sp-family").value, Number($("sp-q").value), Number($("sp-t").value));
    plotSpectrum($("sp-plot"), s.eigenvalues, s.bound);
    show(out, [
      `n = ${s.n}, ${s.edges} edges, ${s.loops} loops removed`,
      `${s.pattern}-free: ${verdict(s.pattern_free)}`,
      `lambda_1 = ${s.eigenvalues[0]}   (with loops: ${s.looped_eigenvalues[0]})`,
      `max nontrivial |lambda| = ${s.nontrivial_radius}   bound ${s.bound}   ${verdict(s.nontrivial_radius <= s.bound)}`,
      `with loops: ${s.looped_nontrivial_radius}   bound ${s.looped_bound}`,
      `theta(complement) >= ${s.theta_complement_lower}   (with loops: ${s.looped_theta_complement_lower})`,
    ]);
  } catch (e) {
    show(out, [`<span class="bad">${e.message}</span>`]);
  }
}

function runTheta() {
  const out = $("th-out");
  try {
    const r = call(theta_json, $("th-text").value, Number($("th-tol").value));
    show(out, [
      `n = ${r.n}, ${r.edges.length} edges, ${r.iterations} iterations`,
      `theta(G)            in [${r.theta.lower}, ${r.theta.upper}]`,
      `theta(complement)   in [${r.theta_complement.lower}, ${r.theta_complement.upper}]`,
      `product             in [${r.product.lower}, ${r.product.upper}]   (n = ${r.n})`,
      r.independence_number === null ? "" : `independence number ${r.independence_number}`,
    ]);
  } catch (e) {
    show(out, [`<span class="bad">${e.message}</span>`]);
  }
}

function runTracePower() {
  const out = $("tp-out");
  try {
    const r = call(trace_power_json, Number($("tp-n").value), Number($("tp-k").value), Number($("tp-p").value), Number($("tp-seed").value));
    drawGraph($("tp-graph"), r.n, r.edges);
    show(out, [
      `C${r.k}-free graph, n = ${r.n}, ${r.edges.length} edges`,
      `tr(M^${r.exponent}) = ${r.trace}   <= ${r.trace_bound}`,
      `lambda_1(M) = ${r.lambda_max}   <= ${r.lambda_bound}`,
      `certificate holds: ${verdict(r.pass)}`,
      `|sum f(v)| = ${r.sum_length}   <= sqrt(n theta(complement)) = ${r.sum_length_bound}`,
    ]);
  } catch (e) {
    show(out, [`<span class="bad">${e.message}</span>`]);
  }
}

await init();
$("status").textContent = "Ready.";
$("sp-run").addEventListener("click", runSpectrum);
$("th-run").addEventListener("click", runTheta);
$("tp-run").addEventListener("click", runTracePower);
for (const b of document.querySelectorAll("[data-preset]")) {
  b.addEventListener("click", () => {
    $("th-text").value = PRESETS[b.dataset.preset];
    runTheta();
  });
}
$("th-text").value = PRESETS.c5;
runSpectrum();
runTheta();
runTracePower();
