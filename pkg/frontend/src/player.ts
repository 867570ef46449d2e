// Playback panel: a stock lottie-web instance fed the session's current
// document. After every committed edit or undo the animation is reloaded
// from the export endpoint, so what plays is always the server's truth.

export type AnimationHandle = {
  destroy(): void;
  goToAndStop?(value: number, isFrame?: boolean): void;
};

export type AnimationEngine = {
  loadAnimation(params: {
    container: Element;
    renderer: string;
    loop: boolean;
    autoplay: boolean;
    animationData: unknown;
  }): AnimationHandle;
};

async function defaultEngine(): Promise<AnimationEngine> {
  const mod = await import("lottie-web");
  return (mod.default ?? mod) as unknown as AnimationEngine;
}

export class Player {
  private container: HTMLElement;
  private engine: AnimationEngine | null = null;
  private engineSource: () => Promise<AnimationEngine>;
  private handle: AnimationHandle | null = null;
  private frame = 0;

  constructor(container: HTMLElement, engine?: AnimationEngine) {
    this.container = container;
    this.engineSource = engine ? async () => engine : defaultEngine;
  }

  async load(documentJson: unknown): Promise<void> {
    if (!this.engine) this.engine = await this.engineSource();
    this.handle?.destroy();
    this.handle = this.engine.loadAnimation({
      container: this.container,
      renderer: "svg",
      loop: true,
      autoplay: false,
      animationData: documentJson,
    });
    this.seek(this.frame);
  }

  seek(frame: number): void {
    this.frame = frame;
    this.handle?.goToAndStop?.(frame, true);
  }
}
