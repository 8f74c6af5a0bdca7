// test/keyboard.test.ts
import assert from "node:assert/strict";
import { test } from "node:test";

// src/keyboard.ts
function handleKey(event, deps) {
  const { session, focusNote, isTypingContext } = deps;
  const state = session.getState();
  if (event.key === "Escape") {
    if (state.editing) session.cancelEdit();
    else session.dismissBanner();
    return;
  }
  if (event.key === "Enter" && (event.ctrlKey || event.metaKey)) {
    if (state.editing) {
      event.preventDefault();
      void session.submitEdit();
    } else if (state.note.trim()) {
      event.preventDefault();
      void session.reject();
    }
    return;
  }
  if (isTypingContext(event.target)) return;
  if (state.phase !== "reviewing" || state.busy) return;
  switch (event.key) {
    case "a":
      event.preventDefault();
      void session.approve();
      break;
    case "r":
      event.preventDefault();
      focusNote();
      break;
    case "e":
      event.preventDefault();
      session.startEdit();
      break;
  }
}

// test/keyboard.test.ts
function makeDeps(statePatch) {
  const calls = {
    approve: 0,
    reject: 0,
    submitEdit: 0,
    startEdit: 0,
    cancelEdit: 0,
    dismissBanner: 0,
    focusNote: 0
  };
  const state = {
    phase: "reviewing",
    item: null,
    editing: false,
    draft: "",
    note: "",
    banner: null,
    progress: null,
    busy: false,
    ...statePatch
  };
  const session = {
    getState: () => state,
    approve: async () => {
      calls.approve += 1;
    },
    reject: async () => {
      calls.reject += 1;
    },
    submitEdit: async () => {
      calls.submitEdit += 1;
    },
    startEdit: () => {
      calls.startEdit += 1;
    },
    cancelEdit: () => {
      calls.cancelEdit += 1;
    },
    dismissBanner: () => {
      calls.dismissBanner += 1;
    }
  };
  const deps = {
    session,
    focusNote: () => {
      calls.focusNote += 1;
    },
    isTypingContext: (target) => target === "field"
  };
  return { deps, calls };
}
function key(k, extra = {}) {
  return {
    key: k,
    ctrlKey: false,
    metaKey: false,
    target: null,
    preventDefault: () => {
    },
    ...extra
  };
}
test("a approves, e edits, r focuses the note", () => {
  const { deps, calls } = makeDeps({});
  handleKey(key("a"), deps);
  handleKey(key("e"), deps);
  handleKey(key("r"), deps);
  assert.equal(calls.approve, 1);
  assert.equal(calls.startEdit, 1);
  assert.equal(calls.focusNote, 1);
});
test("single letters never fire while typing", () => {
  const { deps, calls } = makeDeps({});
  handleKey(key("a", { target: "field" }), deps);
  assert.equal(calls.approve, 0);
});
test("single letters ignored while busy or outside reviewing", () => {
  const busy = makeDeps({ busy: true });
  handleKey(key("a"), busy.deps);
  assert.equal(busy.calls.approve, 0);
  const drained = makeDeps({ phase: "drained" });
  handleKey(key("a"), drained.deps);
  assert.equal(drained.calls.approve, 0);
});
test("ctrl+enter submits the edit while editing", () => {
  const { deps, calls } = makeDeps({ editing: true });
  handleKey(key("Enter", { ctrlKey: true }), deps);
  assert.equal(calls.submitEdit, 1);
});
test("ctrl+enter rejects when a note is pending", () => {
  const { deps, calls } = makeDeps({ note: "bad sample" });
  handleKey(key("Enter", { ctrlKey: true }), deps);
  assert.equal(calls.reject, 1);
});
test("escape cancels an edit, then dismisses banners", () => {
  const editing = makeDeps({ editing: true });
  handleKey(key("Escape"), editing.deps);
  assert.equal(editing.calls.cancelEdit, 1);
  const idle = makeDeps({});
  handleKey(key("Escape"), idle.deps);
  assert.equal(idle.calls.dismissBanner, 1);
});
//# sourceMappingURL=data:application/json;base64,ewogICJ2ZXJzaW9uIjogMywKICAic291cmNlcyI6IFsiLi4vdGVzdC9rZXlib2FyZC50ZXN0LnRzIiwgIi4uL3NyYy9rZXlib2FyZC50cyJdLAogICJzb3VyY2VzQ29udGVudCI6IFsiaW1wb3J0IGFzc2VydCBmcm9tIFwibm9kZTphc3NlcnQvc3RyaWN0XCI7XG5pbXBvcnQgeyB0ZXN0IH0gZnJvbSBcIm5vZGU6dGVzdFwiO1xuXG5pbXBvcnQgeyBoYW5kbGVLZXksIEtleWJvYXJkRGVwcyB9IGZyb20gXCIuLi9zcmMva2V5Ym9hcmQuanNcIjtcbmltcG9ydCB7IFJldmlld1Nlc3Npb24sIFZpZXdTdGF0ZSB9IGZyb20gXCIuLi9zcmMvc3RvcmUuanNcIjtcblxuaW50ZXJmYWNlIENhbGxzIHtcbiAgYXBwcm92ZTogbnVtYmVyO1xuICByZWplY3Q6IG51bWJlcjtcbiAgc3VibWl0RWRpdDogbnVtYmVyO1xuICBzdGFydEVkaXQ6IG51bWJlcjtcbiAgY2FuY2VsRWRpdDogbnVtYmVyO1xuICBkaXNtaXNzQmFubmVyOiBudW1iZXI7XG4gIGZvY3VzTm90ZTogbnVtYmVyO1xufVxuXG5mdW5jdGlvbiBtYWtlRGVwcyhzdGF0ZVBhdGNoOiBQYXJ0aWFsPFZpZXdTdGF0ZT4pOiB7IGRlcHM6IEtleWJvYXJkRGVwczsgY2FsbHM6IENhbGxzIH0ge1xuICBjb25zdCBjYWxsczogQ2FsbHMgPSB7IGFwcHJvdmU6IDAsIHJlamVjdDogMCwgc3VibWl0RWRpdDogMCwgc3RhcnRFZGl0OiAwLFxuICAgICAgICAgICAgICAgICAgICAgICAgIGNhbmNlbEVkaXQ6IDAsIGRpc21pc3NCYW5uZXI6IDAsIGZvY3VzTm90ZTogMCB9O1xuICBjb25zdCBzdGF0ZTogVmlld1N0YXRlID0ge1xuICAgIHBoYXNlOiBcInJldmlld2luZ1wiLCBpdGVtOiBudWxsLCBlZGl0aW5nOiBmYWxzZSwgZHJhZnQ6IFwiXCIsIG5vdGU6IFwiXCIsXG4gICAgYmFubmVyOiBudWxsLCBwcm9ncmVzczogbnVsbCwgYnVzeTogZmFsc2UsIC4uLnN0YXRlUGF0Y2gsXG4gIH07XG4gIGNvbnN0IHNlc3Npb24gPSB7XG4gICAgZ2V0U3RhdGU6ICgpID0+IHN0YXRlLFxuICAgIGFwcHJvdmU6IGFzeW5jICgpID0+IHsgY2FsbHMuYXBwcm92ZSArPSAxOyB9LFxuICAgIHJlamVjdDogYXN5bmMgKCkgPT4geyBjYWxscy5yZWplY3QgKz0gMTsgfSxcbiAgICBzdWJtaXRFZGl0OiBhc3luYyAoKSA9PiB7IGNhbGxzLnN1Ym1pdEVkaXQgKz0gMTsgfSxcbiAgICBzdGFydEVkaXQ6ICgpID0+IHsgY2FsbHMuc3RhcnRFZGl0ICs9IDE7IH0sXG4gICAgY2FuY2VsRWRpdDogKCkgPT4geyBjYWxscy5jYW5jZWxFZGl0ICs9IDE7IH0sXG4gICAgZGlzbWlzc0Jhbm5lcjogKCkgPT4geyBjYWxscy5kaXNtaXNzQmFubmVyICs9IDE7IH0sXG4gIH0gYXMgdW5rbm93biBhcyBSZXZpZXdTZXNzaW9uO1xuICBjb25zdCBkZXBzOiBLZXlib2FyZERlcHMgPSB7XG4gICAgc2Vzc2lvbixcbiAgICBmb2N1c05vdGU6ICgpID0+IHsgY2FsbHMuZm9jdXNOb3RlICs9IDE7IH0sXG4gICAgaXNUeXBpbmdDb250ZXh0OiAodGFyZ2V0KSA9PiAodGFyZ2V0IGFzIHVua25vd24pID09PSBcImZpZWxkXCIsXG4gIH07XG4gIHJldHVybiB7IGRlcHMsIGNhbGxzIH07XG59XG5cbmZ1bmN0aW9uIGtleShrOiBzdHJpbmcsIGV4dHJhOiBQYXJ0aWFsPEtleWJvYXJkRXZlbnQ+ID0ge30pOiBLZXlib2FyZEV2ZW50IHtcbiAgcmV0dXJuIHtcbiAgICBrZXk6IGssXG4gICAgY3RybEtleTogZmFsc2UsXG4gICAgbWV0YUtleTogZmFsc2UsXG4gICAgdGFyZ2V0OiBudWxsLFxuICAgIHByZXZlbnREZWZhdWx0OiAoKSA9PiB7fSxcbiAgICAuLi5leHRyYSxcbiAgfSBhcyB1bmtub3duIGFzIEtleWJvYXJkRXZlbnQ7XG59XG5cbnRlc3QoXCJhIGFwcHJvdmVzLCBlIGVkaXRzLCByIGZvY3VzZXMgdGhlIG5vdGVcIiwgKCkgPT4ge1xuICBjb25zdCB7IGRlcHMsIGNhbGxzIH0gPSBtYWtlRGVwcyh7fSk7XG4gIGhhbmRsZUtleShrZXkoXCJhXCIpLCBkZXBzKTtcbiAgaGFuZGxlS2V5KGtleShcImVcIiksIGRlcHMpO1xuICBoYW5kbGVLZXkoa2V5KFwiclwiKSwgZGVwcyk7XG4gIGFzc2VydC5lcXVhbChjYWxscy5hcHByb3ZlLCAxKTtcbiAgYXNzZXJ0LmVxdWFsKGNhbGxzLnN0YXJ0RWRpdCwgMSk7XG4gIGFzc2VydC5lcXVhbChjYWxscy5mb2N1c05vdGUsIDEpO1xufSk7XG5cbnRlc3QoXCJzaW5nbGUgbGV0dGVycyBuZXZlciBmaXJlIHdoaWxlIHR5cGluZ1wiLCAoKSA9PiB7XG4gIGNvbnN0IHsgZGVwcywgY2FsbHMgfSA9IG1ha2VEZXBzKHt9KTtcbiAgaGFuZGxlS2V5KGtleShcImFcIiwgeyB0YXJnZXQ6IFwiZmllbGRcIiBhcyB1bmtub3duIGFzIEV2ZW50VGFyZ2V0IH0pLCBkZXBzKTtcbiAgYXNzZXJ0LmVxdWFsKGNhbGxzLmFwcHJvdmUsIDApO1xufSk7XG5cbnRlc3QoXCJzaW5nbGUgbGV0dGVycyBpZ25vcmVkIHdoaWxlIGJ1c3kgb3Igb3V0c2lkZSByZXZpZXdpbmdcIiwgKCkgPT4ge1xuICBjb25zdCBidXN5ID0gbWFrZURlcHMoeyBidXN5OiB0cnVlIH0pO1xuICBoYW5kbGVLZXkoa2V5KFwiYVwiKSwgYnVzeS5kZXBzKTtcbiAgYXNzZXJ0LmVxdWFsKGJ1c3kuY2FsbHMuYXBwcm92ZSwgMCk7XG5cbiAgY29uc3QgZHJhaW5lZCA9IG1ha2VEZXBzKHsgcGhhc2U6IFwiZHJhaW5lZFwiIH0pO1xuICBoYW5kbGVLZXkoa2V5KFwiYVwiKSwgZHJhaW5lZC5kZXBzKTtcbiAgYXNzZXJ0LmVxdWFsKGRyYWluZWQuY2FsbHMuYXBwcm92ZSwgMCk7XG59KTtcblxudGVzdChcImN0cmwrZW50ZXIgc3VibWl0cyB0aGUgZWRpdCB3aGlsZSBlZGl0aW5nXCIsICgpID0+IHtcbiAgY29uc3QgeyBkZXBzLCBjYWxscyB9ID0gbWFrZURlcHMoeyBlZGl0aW5nOiB0cnVlIH0pO1xuICBoYW5kbGVLZXkoa2V5KFwiRW50ZXJcIiwgeyBjdHJsS2V5OiB0cnVlIH0pLCBkZXBzKTtcbiAgYXNzZXJ0LmVxdWFsKGNhbGxzLnN1Ym1pdEVkaXQsIDEpO1xufSk7XG5cbnRlc3QoXCJjdHJsK2VudGVyIHJlamVjdHMgd2hlbiBhIG5vdGUgaXMgcGVuZGluZ1wiLCAoKSA9PiB7XG4gIGNvbnN0IHsgZGVwcywgY2FsbHMgfSA9IG1ha2VEZXBzKHsgbm90ZTogXCJiYWQgc2FtcGxlXCIgfSk7XG4gIGhhbmRsZUtleShrZXkoXCJFbnRlclwiLCB7IGN0cmxLZXk6IHRydWUgfSksIGRlcHMpO1xuICBhc3NlcnQuZXF1YWwoY2FsbHMucmVqZWN0LCAxKTtcbn0pO1xuXG50ZXN0KFwiZXNjYXBlIGNhbmNlbHMgYW4gZWRpdCwgdGhlbiBkaXNtaXNzZXMgYmFubmVyc1wiLCAoKSA9PiB7XG4gIGNvbnN0IGVkaXRpbmcgPSBtYWtlRGVwcyh7IGVkaXRpbmc6IHRydWUgfSk7XG4gIGhhbmRsZUtleShrZXkoXCJFc2NhcGVcIiksIGVkaXRpbmcuZGVwcyk7XG4gIGFzc2VydC5lcXVhbChlZGl0aW5nLmNhbGxzLmNhbmNlbEVkaXQsIDEpO1xuXG4gIGNvbnN0IGlkbGUgPSBtYWtlRGVwcyh7fSk7XG4gIGhhbmRsZUtleShrZXkoXCJFc2NhcGVcIiksIGlkbGUuZGVwcyk7XG4gIGFzc2VydC5lcXVhbChpZGxlLmNhbGxzLmRpc21pc3NCYW5uZXIsIDEpO1xufSk7XG4iLCAiLy8gU2hvcnRjdXRzIGtlZXAgcmV2aWV3IHRocm91Z2hwdXQgaGlnaDogYSBhcHByb3ZlLCByIHJlamVjdCAoZm9jdXMgdGhlXG4vLyBub3RlIGZpcnN0KSwgZSBlZGl0LCBDdHJsK0VudGVyIHN1Ym1pdCBlZGl0LCBFc2MgY2FuY2VsL2Rpc21pc3MuXG5cbmltcG9ydCB7IFJldmlld1Nlc3Npb24gfSBmcm9tIFwiLi9zdG9yZS5qc1wiO1xuXG5leHBvcnQgaW50ZXJmYWNlIEtleWJvYXJkRGVwcyB7XG4gIHNlc3Npb246IFJldmlld1Nlc3Npb247XG4gIGZvY3VzTm90ZTogKCkgPT4gdm9pZDtcbiAgaXNUeXBpbmdDb250ZXh0OiAodGFyZ2V0OiBFdmVudFRhcmdldCB8IG51bGwpID0+IGJvb2xlYW47XG59XG5cbmV4cG9ydCBmdW5jdGlvbiBoYW5kbGVLZXkoZXZlbnQ6IEtleWJvYXJkRXZlbnQsIGRlcHM6IEtleWJvYXJkRGVwcyk6IHZvaWQge1xuICBjb25zdCB7IHNlc3Npb24sIGZvY3VzTm90ZSwgaXNUeXBpbmdDb250ZXh0IH0gPSBkZXBzO1xuICBjb25zdCBzdGF0ZSA9IHNlc3Npb24uZ2V0U3RhdGUoKTtcblxuICBpZiAoZXZlbnQua2V5ID09PSBcIkVzY2FwZVwiKSB7XG4gICAgaWYgKHN0YXRlLmVkaXRpbmcpIHNlc3Npb24uY2FuY2VsRWRpdCgpO1xuICAgIGVsc2Ugc2Vzc2lvbi5kaXNtaXNzQmFubmVyKCk7XG4gICAgcmV0dXJuO1xuICB9XG5cbiAgaWYgKGV2ZW50LmtleSA9PT0gXCJFbnRlclwiICYmIChldmVudC5jdHJsS2V5IHx8IGV2ZW50Lm1ldGFLZXkpKSB7XG4gICAgaWYgKHN0YXRlLmVkaXRpbmcpIHtcbiAgICAgIGV2ZW50LnByZXZlbnREZWZhdWx0KCk7XG4gICAgICB2b2lkIHNlc3Npb24uc3VibWl0RWRpdCgpO1xuICAgIH0gZWxzZSBpZiAoc3RhdGUubm90ZS50cmltKCkpIHtcbiAgICAgIGV2ZW50LnByZXZlbnREZWZhdWx0KCk7XG4gICAgICB2b2lkIHNlc3Npb24ucmVqZWN0KCk7XG4gICAgfVxuICAgIHJldHVybjtcbiAgfVxuXG4gIC8vIFNpbmdsZS1sZXR0ZXIgc2hvcnRjdXRzIG5ldmVyIGZpcmUgd2hpbGUgdHlwaW5nIGluIGEgZmllbGQuXG4gIGlmIChpc1R5cGluZ0NvbnRleHQoZXZlbnQudGFyZ2V0KSkgcmV0dXJuO1xuICBpZiAoc3RhdGUucGhhc2UgIT09IFwicmV2aWV3aW5nXCIgfHwgc3RhdGUuYnVzeSkgcmV0dXJuO1xuXG4gIHN3aXRjaCAoZXZlbnQua2V5KSB7XG4gICAgY2FzZSBcImFcIjpcbiAgICAgIGV2ZW50LnByZXZlbnREZWZhdWx0KCk7XG4gICAgICB2b2lkIHNlc3Npb24uYXBwcm92ZSgpO1xuICAgICAgYnJlYWs7XG4gICAgY2FzZSBcInJcIjpcbiAgICAgIGV2ZW50LnByZXZlbnREZWZhdWx0KCk7XG4gICAgICBmb2N1c05vdGUoKTtcbiAgICAgIGJyZWFrO1xuICAgIGNhc2UgXCJlXCI6XG4gICAgICBldmVudC5wcmV2ZW50RGVmYXVsdCgpO1xuICAgICAgc2Vzc2lvbi5zdGFydEVkaXQoKTtcbiAgICAgIGJyZWFrO1xuICB9XG59XG5cbmV4cG9ydCBmdW5jdGlvbiBpbnN0YWxsS2V5Ym9hcmQoZG9jOiBEb2N1bWVudCwgZGVwczogS2V5Ym9hcmREZXBzKTogdm9pZCB7XG4gIGRvYy5hZGRFdmVudExpc3RlbmVyKFwia2V5ZG93blwiLCAoZXZlbnQpID0+IGhhbmRsZUtleShldmVudCwgZGVwcykpO1xufVxuIl0sCiAgIm1hcHBpbmdzIjogIjtBQUFBLE9BQU8sWUFBWTtBQUNuQixTQUFTLFlBQVk7OztBQ1VkLFNBQVMsVUFBVSxPQUFzQixNQUEwQjtBQUN4RSxRQUFNLEVBQUUsU0FBUyxXQUFXLGdCQUFnQixJQUFJO0FBQ2hELFFBQU0sUUFBUSxRQUFRLFNBQVM7QUFFL0IsTUFBSSxNQUFNLFFBQVEsVUFBVTtBQUMxQixRQUFJLE1BQU0sUUFBUyxTQUFRLFdBQVc7QUFBQSxRQUNqQyxTQUFRLGNBQWM7QUFDM0I7QUFBQSxFQUNGO0FBRUEsTUFBSSxNQUFNLFFBQVEsWUFBWSxNQUFNLFdBQVcsTUFBTSxVQUFVO0FBQzdELFFBQUksTUFBTSxTQUFTO0FBQ2pCLFlBQU0sZUFBZTtBQUNyQixXQUFLLFFBQVEsV0FBVztBQUFBLElBQzFCLFdBQVcsTUFBTSxLQUFLLEtBQUssR0FBRztBQUM1QixZQUFNLGVBQWU7QUFDckIsV0FBSyxRQUFRLE9BQU87QUFBQSxJQUN0QjtBQUNBO0FBQUEsRUFDRjtBQUdBLE1BQUksZ0JBQWdCLE1BQU0sTUFBTSxFQUFHO0FBQ25DLE1BQUksTUFBTSxVQUFVLGVBQWUsTUFBTSxLQUFNO0FBRS9DLFVBQVEsTUFBTSxLQUFLO0FBQUEsSUFDakIsS0FBSztBQUNILFlBQU0sZUFBZTtBQUNyQixXQUFLLFFBQVEsUUFBUTtBQUNyQjtBQUFBLElBQ0YsS0FBSztBQUNILFlBQU0sZUFBZTtBQUNyQixnQkFBVTtBQUNWO0FBQUEsSUFDRixLQUFLO0FBQ0gsWUFBTSxlQUFlO0FBQ3JCLGNBQVEsVUFBVTtBQUNsQjtBQUFBLEVBQ0o7QUFDRjs7O0FEbENBLFNBQVMsU0FBUyxZQUFzRTtBQUN0RixRQUFNLFFBQWU7QUFBQSxJQUFFLFNBQVM7QUFBQSxJQUFHLFFBQVE7QUFBQSxJQUFHLFlBQVk7QUFBQSxJQUFHLFdBQVc7QUFBQSxJQUNqRCxZQUFZO0FBQUEsSUFBRyxlQUFlO0FBQUEsSUFBRyxXQUFXO0FBQUEsRUFBRTtBQUNyRSxRQUFNLFFBQW1CO0FBQUEsSUFDdkIsT0FBTztBQUFBLElBQWEsTUFBTTtBQUFBLElBQU0sU0FBUztBQUFBLElBQU8sT0FBTztBQUFBLElBQUksTUFBTTtBQUFBLElBQ2pFLFFBQVE7QUFBQSxJQUFNLFVBQVU7QUFBQSxJQUFNLE1BQU07QUFBQSxJQUFPLEdBQUc7QUFBQSxFQUNoRDtBQUNBLFFBQU0sVUFBVTtBQUFBLElBQ2QsVUFBVSxNQUFNO0FBQUEsSUFDaEIsU0FBUyxZQUFZO0FBQUUsWUFBTSxXQUFXO0FBQUEsSUFBRztBQUFBLElBQzNDLFFBQVEsWUFBWTtBQUFFLFlBQU0sVUFBVTtBQUFBLElBQUc7QUFBQSxJQUN6QyxZQUFZLFlBQVk7QUFBRSxZQUFNLGNBQWM7QUFBQSxJQUFHO0FBQUEsSUFDakQsV0FBVyxNQUFNO0FBQUUsWUFBTSxhQUFhO0FBQUEsSUFBRztBQUFBLElBQ3pDLFlBQVksTUFBTTtBQUFFLFlBQU0sY0FBYztBQUFBLElBQUc7QUFBQSxJQUMzQyxlQUFlLE1BQU07QUFBRSxZQUFNLGlCQUFpQjtBQUFBLElBQUc7QUFBQSxFQUNuRDtBQUNBLFFBQU0sT0FBcUI7QUFBQSxJQUN6QjtBQUFBLElBQ0EsV0FBVyxNQUFNO0FBQUUsWUFBTSxhQUFhO0FBQUEsSUFBRztBQUFBLElBQ3pDLGlCQUFpQixDQUFDLFdBQVksV0FBdUI7QUFBQSxFQUN2RDtBQUNBLFNBQU8sRUFBRSxNQUFNLE1BQU07QUFDdkI7QUFFQSxTQUFTLElBQUksR0FBVyxRQUFnQyxDQUFDLEdBQWtCO0FBQ3pFLFNBQU87QUFBQSxJQUNMLEtBQUs7QUFBQSxJQUNMLFNBQVM7QUFBQSxJQUNULFNBQVM7QUFBQSxJQUNULFFBQVE7QUFBQSxJQUNSLGdCQUFnQixNQUFNO0FBQUEsSUFBQztBQUFBLElBQ3ZCLEdBQUc7QUFBQSxFQUNMO0FBQ0Y7QUFFQSxLQUFLLDJDQUEyQyxNQUFNO0FBQ3BELFFBQU0sRUFBRSxNQUFNLE1BQU0sSUFBSSxTQUFTLENBQUMsQ0FBQztBQUNuQyxZQUFVLElBQUksR0FBRyxHQUFHLElBQUk7QUFDeEIsWUFBVSxJQUFJLEdBQUcsR0FBRyxJQUFJO0FBQ3hCLFlBQVUsSUFBSSxHQUFHLEdBQUcsSUFBSTtBQUN4QixTQUFPLE1BQU0sTUFBTSxTQUFTLENBQUM7QUFDN0IsU0FBTyxNQUFNLE1BQU0sV0FBVyxDQUFDO0FBQy9CLFNBQU8sTUFBTSxNQUFNLFdBQVcsQ0FBQztBQUNqQyxDQUFDO0FBRUQsS0FBSywwQ0FBMEMsTUFBTTtBQUNuRCxRQUFNLEVBQUUsTUFBTSxNQUFNLElBQUksU0FBUyxDQUFDLENBQUM7QUFDbkMsWUFBVSxJQUFJLEtBQUssRUFBRSxRQUFRLFFBQWtDLENBQUMsR0FBRyxJQUFJO0FBQ3ZFLFNBQU8sTUFBTSxNQUFNLFNBQVMsQ0FBQztBQUMvQixDQUFDO0FBRUQsS0FBSywwREFBMEQsTUFBTTtBQUNuRSxRQUFNLE9BQU8sU0FBUyxFQUFFLE1BQU0sS0FBSyxDQUFDO0FBQ3BDLFlBQVUsSUFBSSxHQUFHLEdBQUcsS0FBSyxJQUFJO0FBQzdCLFNBQU8sTUFBTSxLQUFLLE1BQU0sU0FBUyxDQUFDO0FBRWxDLFFBQU0sVUFBVSxTQUFTLEVBQUUsT0FBTyxVQUFVLENBQUM7QUFDN0MsWUFBVSxJQUFJLEdBQUcsR0FBRyxRQUFRLElBQUk7QUFDaEMsU0FBTyxNQUFNLFFBQVEsTUFBTSxTQUFTLENBQUM7QUFDdkMsQ0FBQztBQUVELEtBQUssNkNBQTZDLE1BQU07QUFDdEQsUUFBTSxFQUFFLE1BQU0sTUFBTSxJQUFJLFNBQVMsRUFBRSxTQUFTLEtBQUssQ0FBQztBQUNsRCxZQUFVLElBQUksU0FBUyxFQUFFLFNBQVMsS0FBSyxDQUFDLEdBQUcsSUFBSTtBQUMvQyxTQUFPLE1BQU0sTUFBTSxZQUFZLENBQUM7QUFDbEMsQ0FBQztBQUVELEtBQUssNkNBQTZDLE1BQU07QUFDdEQsUUFBTSxFQUFFLE1BQU0sTUFBTSxJQUFJLFNBQVMsRUFBRSxNQUFNLGFBQWEsQ0FBQztBQUN2RCxZQUFVLElBQUksU0FBUyxFQUFFLFNBQVMsS0FBSyxDQUFDLEdBQUcsSUFBSTtBQUMvQyxTQUFPLE1BQU0sTUFBTSxRQUFRLENBQUM7QUFDOUIsQ0FBQztBQUVELEtBQUssa0RBQWtELE1BQU07QUFDM0QsUUFBTSxVQUFVLFNBQVMsRUFBRSxTQUFTLEtBQUssQ0FBQztBQUMxQyxZQUFVLElBQUksUUFBUSxHQUFHLFFBQVEsSUFBSTtBQUNyQyxTQUFPLE1BQU0sUUFBUSxNQUFNLFlBQVksQ0FBQztBQUV4QyxRQUFNLE9BQU8sU0FBUyxDQUFDLENBQUM7QUFDeEIsWUFBVSxJQUFJLFFBQVEsR0FBRyxLQUFLLElBQUk7QUFDbEMsU0FBTyxNQUFNLEtBQUssTUFBTSxlQUFlLENBQUM7QUFDMUMsQ0FBQzsiLAogICJuYW1lcyI6IFtdCn0K
