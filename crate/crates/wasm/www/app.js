import init, { braidJones, verlindeTable, curveOperator } from "./pkg/cskit_wasm.js";

const $ = (id) => document.getElementById(id);

function fail(el, e) {
  el.innerHTML = "";
  const span = document.createElement("span");
  span.className = "err";
  span.textContent = String(e.message ?? e);
  el.appendChild(span);
}

function fmt(x) {
  return Math.abs(x) < 1e-12 ? "0" : x.toPrecision(6);
}

function showJones() {
  const out = $("jones-out");
  try {
    const v = JSON.parse(braidJones($("braid").value));
    const lines = [
      `V(t) = ${v.jones}`,
      `Markov trace: ${v.markovTrace ?? "unavailable"}  (agree: ${v.agree})`,
      `${v.crossings} crossings, ${v.components} component(s)`,
      "",
      "r   V(exp(2πi/r))",
      ...v.atRoots.map(([r, re, im]) => `${String(r).padEnd(3)} ${fmt(re)} ${im < 0 ? "-" : "+"} ${fmt(Math.abs(im))}i`),
    ];
    out.textContent = "";
    const pre = document.createElement("pre");
    pre.textContent = lines.join("\n");
    out.appendChild(pre);
  } catch (e) {
    fail(out, e);
  }
}

function showVerlinde() {
  const out = $("verlinde-out");
  try {
    const v = JSON.parse(verlindeTable(Number($("gmax").value), Number($("rmax").value)));
    const table = document.createElement("table");
    const head = table.insertRow();
    head.insertCell().outerHTML = "<th>g \\ r</th>";
    for (const r of v.levels) head.insertCell().outerHTML = `<th>${r}</th>`;
    v.rows.forEach((row, i) => {
      const tr = table.insertRow();
      tr.insertCell().outerHTML = `<th>${i + 1}</th>`;
      for (const d of row) tr.insertCell().textContent = d;
    });
    out.innerHTML = "";
    out.appendChild(table);
  } catch (e) {
    fail(out, e);
  }
}

function showOperator() {
  const text = $("csop-out");
  const canvas = $("heat");
  const ctx = canvas.getContext("2d");
  try {
    const v = JSON.parse(curveOperator(Number($("p").value), Number($("q").value), Number($("r").value)));
    const m = v.matrix;
    const n = m.length;
    const cell = canvas.width / n;
    let max = 0;
    for (const row of m) for (const [re, im] of row) max = Math.max(max, Math.hypot(re, im));
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    m.forEach((row, i) =>
      row.forEach(([re, im], j) => {
        const mag = max > 0 ? Math.hypot(re, im) / max : 0;
        const hue = ((Math.atan2(im, re) / (2 * Math.PI)) * 360 + 360) % 360;
        ctx.fillStyle = `hsl(${hue}, 80%, ${100 - 55 * mag}%)`;
        ctx.fillRect(j * cell, i * cell, cell, cell);
      }),
    );
    text.textContent = m
      .map((row) => row.map(([re, im]) => (im === 0 ? fmt(re) : `${fmt(re)}${im < 0 ? "-" : "+"}${fmt(Math.abs(im))}i`)).join("  "))
      .join("\n");
  } catch (e) {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    fail(text, e);
  }
}

await init();
$("jones-go").onclick = showJones;
$("verlinde-go").onclick = showVerlinde;
$("csop-go").onclick = showOperator;
showJones();
showVerlinde();
showOperator();
