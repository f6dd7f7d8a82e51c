import { ApiClient, ApiError } from './api.js';
import { currentLevel, visibleQuestions } from './questions.js';
import { SelectionController, Store, type QuestionnaireState } from './state.js';
import type { SelectedMethod } from './types.js';

export interface AppOptions {
  debounceMs?: number;
}

export function renderApp(root: HTMLElement, client: ApiClient, options: AppOptions = {}): Store {
  const store = new Store();
  const controller = new SelectionController(store, (d, e) => client.select(d, e), {
    debounceMs: options.debounceMs,
  });

  const banner = el('div', 'offline-banner');
  banner.textContent = 'Service unreachable - answers kept, retrying on the next change.';
  const questionsBox = el('section', 'questions');
  const resultBox = el('section', 'result');
  const detailBox = el('aside', 'method-detail');

  const explainLabel = el('label', 'explain-toggle');
  const explainInput = document.createElement('input');
  explainInput.type = 'checkbox';
  explainInput.addEventListener('change', () => {
    store.setExplain(explainInput.checked);
    controller.schedule();
  });
  explainLabel.append(explainInput, document.createTextNode(' show the set-algebra view'));

  root.append(banner, explainLabel, questionsBox, resultBox, detailBox);

  function sync(state: QuestionnaireState): void {
    banner.style.display = state.offline ? 'block' : 'none';
    renderQuestions(state);
    renderResult(state);
    void renderDetail(state);
  }

  function renderQuestions(state: QuestionnaireState): void {
    questionsBox.innerHTML = '';
    const hint = el('p', 'level-hint');
    hint.textContent = `Questions opened down to level ${currentLevel(state.answers)} of 3.`;
    questionsBox.appendChild(hint);

    for (const question of visibleQuestions(state.answers)) {
      const card = el('fieldset', 'question');
      card.dataset.slot = question.slot;
      const title = document.createElement('legend');
      title.textContent = `${question.slot}: ${question.title}`;
      card.appendChild(title);

      const choices = [...question.options, { value: 'unknown' as const, label: "don't know" }];
      for (const option of choices) {
        const label = el('label', 'choice');
        const input = document.createElement('input');
        input.type = 'radio';
        input.name = question.slot;
        input.value = String(option.value);
        input.checked = state.answers[question.slot] === option.value;
        input.addEventListener('change', () => {
          store.answer(question.slot, option.value);
          controller.schedule();
        });
        label.append(input, document.createTextNode(` ${option.label}`));
        card.appendChild(label);
      }
      questionsBox.appendChild(card);
    }
  }

  function renderResult(state: QuestionnaireState): void {
    resultBox.innerHTML = '';
    const result = state.liveResult;
    const count = el('p', 'method-count');
    count.textContent =
      result === null ? 'Loading matching methods...' : `${result.method_count} methods match`;
    resultBox.appendChild(count);
    if (result === null) return;

    if (result.activated_rule) {
      const rule = el('p', 'activated-rule');
      rule.textContent = `activated rule: ${result.activated_rule}`;
      resultBox.appendChild(rule);
    }
    if (state.explain && result.explanation) {
      const expr = el('p', 'explanation');
      expr.textContent = result.explanation;
      resultBox.appendChild(expr);
    }
    const list = el('ul', 'method-list');
    for (const method of result.methods) {
      list.appendChild(methodItem(method));
    }
    resultBox.appendChild(list);
  }

  function methodItem(method: SelectedMethod): HTMLElement {
    const item = document.createElement('li');
    const link = document.createElement('button');
    link.className = 'method-link';
    link.textContent = `${method.abbreviation} - ${method.name}`;
    link.addEventListener('click', () => store.showDetails(method.abbreviation));
    item.appendChild(link);
    return item;
  }

  async function renderDetail(state: QuestionnaireState): Promise<void> {
    detailBox.innerHTML = '';
    if (!state.detailAbbr) return;
    try {
      const record = await client.methodByAbbr(state.detailAbbr);
      const title = el('h2', 'detail-name');
      title.textContent = `${record.name} (${record.abbreviation})`;
      const description = el('p', 'detail-description');
      description.textContent = record.description ?? 'No description recorded.';
      const badges = el('p', 'detail-badges');
      badges.textContent = Object.entries(record.characteristics)
        .map(([slot, value]) => `${slot}=${value}`)
        .join(' ');
      const source = el('p', 'detail-citation');
      source.textContent = `source: ${record.citation_key}`;
      detailBox.append(title, description, badges, source);
    } catch (error) {
      const missing = el('p', 'detail-not-found');
      missing.textContent =
        error instanceof ApiError && error.status === 404
          ? `No method called "${state.detailAbbr}".`
          : 'Could not load the method record.';
      detailBox.appendChild(missing);
    }
  }

  store.subscribe(sync);
  sync(store.get());
  void controller.refresh(); // initial count: everything unknown, 56 methods
  return store;
}

function el(tag: string, className: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  return node;
}
