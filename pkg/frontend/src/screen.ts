/**
 * DOM wiring for the practice screen.
 *
 * Renders a PracticeSession into a container and forwards clicks to it.
 * All texts shown as judgments come from the session, which in turn only
 * relays service responses. Button handlers publish their completion as
 * `lastAction` so tests can await them.
 */

import { ApiClient, Strategy } from "./api.js";
import { Feedback, PracticeSession } from "./session.js";

const STRATEGIES: Strategy[] = ["innermost", "outermost", "free"];

function stepsPhrase(count: number): string {
  return `${count} ${count === 1 ? "step" : "steps"} remaining`;
}

export function feedbackText(feedback: Feedback): string {
  switch (feedback.kind) {
    case "hint":
      return `Hint: ${feedback.message}`;
    case "stepsRemaining":
      return `${stepsPhrase(feedback.count)}.`;
    case "serviceError":
      return feedback.message;
    case "diagnosis": {
      const diagnosis = feedback.diagnosis;
      switch (diagnosis.kind) {
        case "CorrectStep": {
          const countdown =
            diagnosis.stepsRemaining === null
              ? ""
              : ` (${stepsPhrase(diagnosis.stepsRemaining)})`;
          return `Correct — ${diagnosis.message}${countdown}`;
        }
        case "EquivalentButOffStrategy":
          return "Equivalent, but not the strategy's next step.";
        case "CorrectResultWrongPath":
          return "That result is reachable, but not by a permitted next step.";
        case "Incorrect":
          return diagnosis.message
            ? `Incorrect — ${diagnosis.message}`
            : "Incorrect";
        case "ParseError":
          return diagnosis.message;
      }
    }
  }
}

export class PracticeScreen {
  readonly session: PracticeSession;
  /** Resolves when the most recent button handler has finished. */
  lastAction: Promise<void> = Promise.resolve();

  private readonly banner: HTMLDivElement;
  private readonly exampleSelect: HTMLSelectElement;
  private readonly startExampleButton: HTMLButtonElement;
  private readonly customInput: HTMLInputElement;
  private readonly startCustomButton: HTMLButtonElement;
  private readonly strategyInputs: HTMLInputElement[] = [];
  private readonly workSection: HTMLElement;
  private readonly transcriptList: HTMLOListElement;
  private readonly statusLine: HTMLDivElement;
  private readonly stepInput: HTMLInputElement;
  private readonly checkButton: HTMLButtonElement;
  private readonly hintButton: HTMLButtonElement;
  private readonly stepsButton: HTMLButtonElement;
  private readonly inlineError: HTMLDivElement;
  private readonly feedbackBox: HTMLDivElement;
  private readonly counter: HTMLDivElement;

  constructor(root: HTMLElement, api: ApiClient) {
    this.session = new PracticeSession(api);
    const doc = root.ownerDocument;

    const el = <K extends keyof HTMLElementTagNameMap>(
      tag: K,
      id?: string,
      text?: string,
    ): HTMLElementTagNameMap[K] => {
      const node = doc.createElement(tag);
      if (id) node.id = id;
      if (text) node.textContent = text;
      return node;
    };

    this.banner = el("div", "banner");
    this.banner.hidden = true;

    const setup = el("section");
    setup.className = "setup";
    const exampleLabel = el("label", undefined, "Example ");
    this.exampleSelect = el("select", "example-select");
    exampleLabel.append(this.exampleSelect);
    this.startExampleButton = el("button", "start-example", "Practice");
    this.customInput = el("input", "custom-expr");
    this.customInput.placeholder = "or type an expression";
    this.startCustomButton = el("button", "start-custom", "Start");
    const strategyBox = el("fieldset", "strategy");
    strategyBox.append(el("legend", undefined, "Strategy"));
    for (const strategy of STRATEGIES) {
      const label = el("label", undefined, undefined);
      const radio = el("input", `strategy-${strategy}`);
      radio.type = "radio";
      radio.name = "strategy";
      radio.value = strategy;
      radio.checked = strategy === this.session.strategy;
      label.append(radio, doc.createTextNode(` ${strategy}`));
      strategyBox.append(label);
      this.strategyInputs.push(radio);
    }
    setup.append(
      exampleLabel,
      this.startExampleButton,
      this.customInput,
      this.startCustomButton,
      strategyBox,
    );

    this.workSection = el("section");
    this.workSection.className = "work";
    this.workSection.hidden = true;
    this.transcriptList = el("ol", "transcript");
    this.statusLine = el("div", "status");
    this.statusLine.hidden = true;
    const entry = el("div");
    entry.className = "entry";
    this.stepInput = el("input", "step-input");
    this.stepInput.placeholder = "next step";
    this.checkButton = el("button", "check-step", "Check step");
    this.hintButton = el("button", "hint", "Hint");
    this.stepsButton = el("button", "steps-left", "Steps left");
    entry.append(this.stepInput, this.checkButton, this.hintButton, this.stepsButton);
    this.inlineError = el("div", "inline-error");
    this.inlineError.hidden = true;
    this.feedbackBox = el("div", "feedback");
    this.feedbackBox.hidden = true;
    this.counter = el("div", "steps-remaining");
    this.workSection.append(
      this.transcriptList,
      this.statusLine,
      entry,
      this.inlineError,
      this.feedbackBox,
      this.counter,
    );

    root.append(this.banner, setup, this.workSection);

    this.startExampleButton.addEventListener("click", () => {
      if (this.exampleSelect.value) this.startExpression(this.exampleSelect.value);
    });
    this.startCustomButton.addEventListener("click", () => {
      const text = this.customInput.value.trim();
      if (text) this.startExpression(text);
    });
    for (const radio of this.strategyInputs) {
      radio.addEventListener("change", () => {
        if (radio.checked) {
          this.session.setStrategy(radio.value as Strategy);
          this.refresh();
        }
      });
    }
    this.checkButton.addEventListener("click", () => this.checkStep());
    this.stepInput.addEventListener("keydown", (event) => {
      if (event.key === "Enter") this.checkStep();
    });
    this.hintButton.addEventListener("click", () => {
      this.act(() => this.session.requestHint());
    });
    this.stepsButton.addEventListener("click", () => {
      this.act(() => this.session.requestStepsRemaining());
    });
  }

  /** Loads the example list and starts practising the first example. */
  async init(): Promise<void> {
    const examples = await this.session.loadExamples();
    const doc = this.exampleSelect.ownerDocument;
    for (const example of examples) {
      const option = doc.createElement("option");
      option.value = example;
      option.textContent = example;
      this.exampleSelect.append(option);
    }
    if (examples.length > 0) {
      this.session.start(examples[0]);
      await this.session.requestStepsRemaining();
    }
    this.refresh();
  }

  startExpression(text: string): void {
    this.session.start(text);
    this.stepInput.value = "";
    this.act(() => this.session.requestStepsRemaining());
  }

  private checkStep(): void {
    const text = this.stepInput.value;
    this.act(async () => {
      const before = this.session.transcript.length;
      await this.session.submitStep(text);
      if (this.session.transcript.length > before) this.stepInput.value = "";
    });
  }

  private act(run: () => Promise<void>): void {
    this.lastAction = (async () => {
      const task = run();
      this.refresh();
      await task;
      this.refresh();
    })();
  }

  refresh(): void {
    const session = this.session;
    const doc = this.transcriptList.ownerDocument;

    this.banner.hidden = session.banner === null;
    this.banner.textContent = session.banner ?? "";

    this.workSection.hidden = !session.started;

    this.transcriptList.replaceChildren();
    session.transcript.forEach((entry, index) => {
      const item = doc.createElement("li");
      if (index > 0 && entry.message) {
        const why = doc.createElement("div");
        why.className = "annotation";
        why.textContent = `= { ${entry.message} }`;
        item.append(why);
      }
      const expr = doc.createElement("div");
      expr.className = "expr";
      expr.textContent = entry.expr;
      item.append(expr);
      this.transcriptList.append(item);
    });

    if (session.completed) {
      this.statusLine.hidden = false;
      this.statusLine.textContent = `Done: ${session.exprText} is in normal form (${session.stepCount} steps).`;
    } else {
      this.statusLine.hidden = true;
      this.statusLine.textContent = "";
    }

    this.inlineError.hidden = session.inlineError === null;
    this.inlineError.textContent = session.inlineError ?? "";

    if (session.feedback === null) {
      this.feedbackBox.hidden = true;
      this.feedbackBox.replaceChildren();
    } else {
      this.feedbackBox.hidden = false;
      this.feedbackBox.replaceChildren();
      const line = doc.createElement("div");
      line.className = "verdict";
      line.textContent = feedbackText(session.feedback);
      this.feedbackBox.append(line);
      if (
        session.feedback.kind === "diagnosis" &&
        session.feedback.diagnosis.expected.length > 0
      ) {
        const lead = doc.createElement("div");
        lead.textContent = "Permitted next steps:";
        const list = doc.createElement("ul");
        list.id = "expected";
        for (const expected of session.feedback.diagnosis.expected) {
          const item = doc.createElement("li");
          item.textContent = expected;
          list.append(item);
        }
        this.feedbackBox.append(lead, list);
      }
    }

    this.counter.textContent =
      session.stepsRemaining === null
        ? ""
        : `Steps remaining: ${session.stepsRemaining}`;

    const closed = session.pending || !session.started || session.completed;
    this.stepInput.disabled = closed;
    this.checkButton.disabled = closed;
    this.hintButton.disabled = closed;
    this.stepsButton.disabled = closed;
    this.exampleSelect.disabled = session.pending;
    this.startExampleButton.disabled = session.pending;
    this.startCustomButton.disabled = session.pending;
    this.customInput.disabled = session.pending;
  }
}

export function mountPracticeScreen(root: HTMLElement, api: ApiClient): PracticeScreen {
  return new PracticeScreen(root, api);
}
