import type { Answers, SlotName } from './types.js';

export interface QuestionOption {
  value: number;
  label: string;
}

export interface Question {
  slot: SlotName;
  level: 1 | 2 | 3;
  title: string;
  options: QuestionOption[];
  /** Render only when the parent slot holds one of these values. */
  enabledBy?: { slot: SlotName; values: number[] };
}

// Question order follows the selection tree: general slots first, children
// revealed by the answer that makes them meaningful.  Every question also
// gets an implicit "don't know" choice in the UI.
export const QUESTIONS: Question[] = [
  {
    slot: 'c1',
    level: 1,
    title: 'Will the criteria carry different weights?',
    options: [
      { value: 0, label: 'no, all criteria equal' },
      { value: 1, label: 'yes, weighted criteria' },
    ],
  },
  {
    slot: 'c2',
    level: 1,
    title: 'On what scale are the decision variants compared?',
    options: [
      { value: 1, label: 'qualitative' },
      { value: 2, label: 'quantitative' },
      { value: 3, label: 'relative (pairwise)' },
    ],
  },
  {
    slot: 'c3',
    level: 1,
    title: 'Does the problem involve uncertainty?',
    options: [
      { value: 0, label: 'no' },
      { value: 1, label: 'yes' },
    ],
  },
  {
    slot: 'c4',
    level: 1,
    title: 'What should the analysis deliver?',
    options: [
      { value: 1, label: 'pick the best variant (selection)' },
      { value: 2, label: 'assign variants to classes (sorting)' },
      { value: 3, label: 'rank the variants' },
      { value: 4, label: 'sorting plus selection' },
    ],
  },
  {
    slot: 'c1.1',
    level: 2,
    title: 'What kind of weights?',
    enabledBy: { slot: 'c1', values: [1] },
    options: [
      { value: 1, label: 'qualitative' },
      { value: 2, label: 'quantitative' },
      { value: 3, label: 'relative (pairwise)' },
    ],
  },
  {
    slot: 'c3.1',
    level: 2,
    title: 'What does the uncertainty concern?',
    enabledBy: { slot: 'c3', values: [1] },
    options: [
      { value: 1, label: 'input data' },
      { value: 2, label: 'preferences' },
      { value: 3, label: 'both' },
    ],
  },
  {
    slot: 'c4.1',
    level: 2,
    title: 'What kind of ranking is expected?',
    enabledBy: { slot: 'c4', values: [3] },
    options: [
      { value: 1, label: 'partial (incomparability allowed)' },
      { value: 2, label: 'complete order' },
    ],
  },
  {
    slot: 'c3.1.1',
    level: 3,
    title: 'Which inputs are fuzzy?',
    enabledBy: { slot: 'c3.1', values: [1, 3] },
    options: [
      { value: 1, label: 'criteria weights' },
      { value: 2, label: 'variant performances' },
      { value: 3, label: 'both' },
    ],
  },
  {
    slot: 'c3.1.2',
    level: 3,
    title: 'Which preference thresholds are used?',
    enabledBy: { slot: 'c3.1', values: [2, 3] },
    options: [
      { value: 1, label: 'indifference' },
      { value: 2, label: 'preference' },
      { value: 3, label: 'both' },
    ],
  },
];

export function isQuestionVisible(question: Question, answers: Answers): boolean {
  if (!question.enabledBy) return true;
  const parent = answers[question.enabledBy.slot];
  return typeof parent === 'number' && question.enabledBy.values.includes(parent);
}

/** Questions to render: a child appears as soon as its parent enables it. */
export function visibleQuestions(answers: Answers): Question[] {
  return QUESTIONS.filter((q) => isQuestionVisible(q, answers));
}

/** Deepest hierarchy level the questionnaire has opened up. */
export function currentLevel(answers: Answers): 1 | 2 | 3 {
  return visibleQuestions(answers).reduce<1 | 2 | 3>(
    (deepest, q) => (q.level > deepest ? q.level : deepest),
    1,
  );
}
