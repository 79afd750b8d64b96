/**
 * Practice session state, free of any DOM concerns.
 *
 * Holds the current expression, the transcript of accepted steps, and the
 * chosen strategy. Every judgment (correctness, hints, counts) comes
 * verbatim from the service; this module never evaluates expressions.
 * One request may be in flight at a time; actions started while pending
 * are dropped.
 */

import {
  ApiClient,
  DiagnosisPayload,
  ServiceUnreachableError,
  Strategy,
} from "./api.js";

export interface TranscriptEntry {
  expr: string;
  /** Rule id and display text of the step that produced this entry. */
  ruleId?: string;
  message?: string;
}

export type Feedback =
  | { kind: "diagnosis"; diagnosis: DiagnosisPayload }
  | { kind: "hint"; message: string }
  | { kind: "stepsRemaining"; count: number }
  | { kind: "serviceError"; message: string };

export class PracticeSession {
  exprText = "";
  transcript: TranscriptEntry[] = [];
  strategy: Strategy = "outermost";
  stepsRemaining: number | null = null;
  feedback: Feedback | null = null;
  /** Parse message for the text in the entry box, shown beneath it. */
  inlineError: string | null = null;
  /** Set when the service cannot be reached at all. */
  banner: string | null = null;
  pending = false;

  constructor(private readonly api: ApiClient) {}

  get started(): boolean {
    return this.transcript.length > 0;
  }

  get completed(): boolean {
    return this.started && this.stepsRemaining === 0;
  }

  get stepCount(): number {
    return Math.max(0, this.transcript.length - 1);
  }

  start(exprText: string): void {
    this.exprText = exprText;
    this.transcript = [{ expr: exprText }];
    this.stepsRemaining = null;
    this.feedback = null;
    this.inlineError = null;
  }

  setStrategy(strategy: Strategy): void {
    if (strategy === this.strategy) return;
    this.strategy = strategy;
    if (this.started) this.start(this.transcript[0].expr);
  }

  async loadExamples(): Promise<string[]> {
    const examples = await this.guard(async () => {
      const response = await this.api.examples();
      return response.ok ? response.payload.examples : [];
    });
    return examples ?? [];
  }

  async submitStep(submitted: string): Promise<void> {
    const text = submitted.trim();
    if (!text || !this.started) return;
    await this.guard(async () => {
      const response = await this.api.diagnose(this.exprText, text, this.strategy);
      if (!response.ok) {
        this.feedback = { kind: "serviceError", message: response.error.message };
        return;
      }
      const diagnosis = response.payload;
      if (diagnosis.kind === "ParseError") {
        this.inlineError = diagnosis.message;
        this.feedback = null;
        return;
      }
      this.inlineError = null;
      this.feedback = { kind: "diagnosis", diagnosis };
      if (diagnosis.kind === "CorrectStep") {
        this.transcript = [
          ...this.transcript,
          {
            expr: text,
            ruleId: diagnosis.ruleId ?? undefined,
            message: diagnosis.message,
          },
        ];
        this.exprText = text;
        this.stepsRemaining = diagnosis.stepsRemaining;
      }
    });
  }

  async requestHint(): Promise<void> {
    if (!this.started) return;
    await this.guard(async () => {
      const response = await this.api.hint(this.exprText, this.strategy);
      if (!response.ok) {
        this.feedback = { kind: "serviceError", message: response.error.message };
        return;
      }
      const hint = response.payload.hint;
      this.feedback = {
        kind: "hint",
        message: hint ? hint.message : "No step applies.",
      };
    });
  }

  async requestStepsRemaining(): Promise<void> {
    if (!this.started) return;
    await this.guard(async () => {
      const response = await this.api.stepsRemaining(this.exprText, this.strategy);
      if (!response.ok) {
        this.feedback = { kind: "serviceError", message: response.error.message };
        return;
      }
      this.stepsRemaining = response.payload.stepsRemaining;
      this.feedback = {
        kind: "stepsRemaining",
        count: response.payload.stepsRemaining,
      };
    });
  }

  private async guard<T>(call: () => Promise<T>): Promise<T | undefined> {
    if (this.pending) return undefined;
    this.pending = true;
    this.banner = null;
    try {
      return await call();
    } catch (cause) {
      if (cause instanceof ServiceUnreachableError) {
        this.banner = cause.message;
        return undefined;
      }
      throw cause;
    } finally {
      this.pending = false;
    }
  }
}
