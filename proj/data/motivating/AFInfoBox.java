public class AFInfoBox extends CustomComponent {
    private Button assignRouteIcon;
    private Route assignNewRoute;

    public AFInfoBox() {
        assignRouteIcon = new Button();
        assignRouteIcon.setIcon(ImageProvider.getAssignRouteResource());
    }
}
