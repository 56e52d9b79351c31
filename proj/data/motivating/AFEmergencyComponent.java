/**
 * Emergency panel for fleet-wide commands.
 */
public class AFEmergencyComponent extends CustomComponent {
    private static final long serialVersionUID = -3340362787463927373L;

    private Button hoverButton;
    private Button homeButton;
    private Label emergencyLabel;
    private HorizontalLayout buttonLayout;
    private VerticalLayout panelLayout;
    private Window confirmWindow;

    public AFEmergencyComponent() {
        panelLayout = new VerticalLayout();
        panelLayout.addStyleName("fr_fleet_emergency");
        emergencyLabel = new Label("Emergency controls");
        emergencyLabel.addStyleName("fr_bold_label");
        hoverButton = new Button("Hover in place");
        hoverButton.setHeight("30px");
        hoverButton.setStyleName(ValoTheme.BUTTON_DANGER);
        homeButton = new Button("Return home");
        homeButton.setHeight("30px");
        homeButton.setStyleName(ValoTheme.BUTTON_DANGER);
        buttonLayout = new HorizontalLayout();
        buttonLayout.addComponents(hoverButton, homeButton);
        panelLayout.addComponents(emergencyLabel, buttonLayout);
        setCompositionRoot(panelLayout);
    }

    // Hover every active drone in place.
    public void hoverAll(List<String> droneNames) {
        for (String droneName : droneNames) {
            EmergencyService.hover(droneName);
        }
    }

    // Send every active drone back to its home location.
    public void recallAll(List<String> droneNames) {
        for (String droneName : droneNames) {
            EmergencyService.recall(droneName);
        }
    }

    // Ask for confirmation before the fleet-wide command is sent.
    private void showConfirmWindow(String caption, Runnable onYes) {
        confirmWindow = new Window(caption);
        confirmWindow.setModal(true);
        confirmWindow.setClosable(false);
        confirmWindow.setResizable(false);
        Button yesButton = new Button("Yes");
        Button noButton = new Button("No");
        yesButton.addClickListener(event -> {
            onYes.run();
            UI.getCurrent().removeWindow(confirmWindow);
        });
        noButton.addClickListener(event -> UI.getCurrent().removeWindow(confirmWindow));
        HorizontalLayout confirmButtons = new HorizontalLayout(yesButton, noButton);
        confirmWindow.setContent(confirmButtons);
        UI.getCurrent().addWindow(confirmWindow);
    }

    public void addHoverClickListener(ClickListener listener) {
        hoverButton.addClickListener(listener);
    }

    public void addHomeClickListener(ClickListener listener) {
        homeButton.addClickListener(listener);
    }

    public Button getHoverButton() {
        return hoverButton;
    }

    public Button getHomeButton() {
        return homeButton;
    }

    public void setEnabled(boolean enabled) {
        hoverButton.setEnabled(enabled);
        homeButton.setEnabled(enabled);
    }
}
